//! Circular-layout SVG drawing of small automata.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write;

use automata::{Nfa, State, Symbol};

pub const MAX_DRAWN_STATES: usize = 80;

const NODE_RADIUS: f64 = 18.0;
const MARGIN: f64 = 70.0;

#[derive(Clone, Copy)]
struct Point {
    x: f64,
    y: f64,
}

impl Point {
    fn towards(self, other: Point, distance: f64) -> Point {
        let (dx, dy) = (other.x - self.x, other.y - self.y);
        let len = dx.hypot(dy).max(1e-9);
        Point {
            x: self.x + dx / len * distance,
            y: self.y + dy / len * distance,
        }
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            c if c.is_control() => {
                let _ = write!(out, "\\x{:02x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

/// Draws `nfa` with states on a circle. Parallel transitions share one edge
/// whose text is `label` applied to their sorted symbols.
pub fn render(nfa: &Nfa, label: impl Fn(&[Symbol]) -> String) -> Result<String, String> {
    let n = nfa.num_states();
    if n > MAX_DRAWN_STATES {
        return Err(format!("{n} states is too many to draw (limit {MAX_DRAWN_STATES})"));
    }
    let radius = if n <= 1 { 0.0 } else { (n as f64 * 24.0).max(90.0) };
    let size = 2.0 * (radius + MARGIN);
    let centre = Point {
        x: radius + MARGIN,
        y: radius + MARGIN,
    };
    let angle = |q: State| PI + 2.0 * PI * q as f64 / n.max(1) as f64;
    let pos: Vec<Point> = (0..n)
        .map(|q| Point {
            x: centre.x + radius * angle(q).cos(),
            y: centre.y + radius * angle(q).sin(),
        })
        .collect();

    let mut edges: BTreeMap<(State, State), Vec<Symbol>> = BTreeMap::new();
    for t in nfa.transitions() {
        edges.entry((t.source, t.target)).or_default().push(t.symbol);
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}" font-family="monospace" font-size="12">"#
    );
    svg.push_str(
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#,
    );
    svg.push('\n');

    for (&(p, q), symbols) in &edges {
        let text = escape(&label(symbols));
        if p == q {
            // a loop bulging away from the centre
            let a = angle(p);
            let (out_x, out_y) = if n <= 1 { (0.0, -1.0) } else { (a.cos(), a.sin()) };
            let spread = 0.45;
            let rot = |dx: f64, dy: f64, t: f64| (dx * t.cos() - dy * t.sin(), dx * t.sin() + dy * t.cos());
            let (ax, ay) = rot(out_x, out_y, -spread);
            let (bx, by) = rot(out_x, out_y, spread);
            let c = pos[p];
            let start = Point { x: c.x + ax * NODE_RADIUS, y: c.y + ay * NODE_RADIUS };
            let end = Point { x: c.x + bx * NODE_RADIUS, y: c.y + by * NODE_RADIUS };
            let reach = 55.0;
            let _ = writeln!(
                svg,
                r#"<path d="M{:.1},{:.1} C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}" fill="none" stroke="black" marker-end="url(#arrow)"/>"#,
                start.x,
                start.y,
                c.x + ax * reach,
                c.y + ay * reach,
                c.x + bx * reach,
                c.y + by * reach,
                end.x,
                end.y
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{text}</text>"#,
                c.x + out_x * (reach * 0.8 + 6.0),
                c.y + out_y * (reach * 0.8 + 6.0) + 4.0
            );
            continue;
        }
        let (a, b) = (pos[p], pos[q]);
        let mid = Point { x: (a.x + b.x) / 2.0, y: (a.y + b.y) / 2.0 };
        // bend edges that have a partner in the opposite direction apart
        let bend = if edges.contains_key(&(q, p)) { 28.0 } else { 0.0 };
        let len = (b.x - a.x).hypot(b.y - a.y).max(1e-9);
        let (nx, ny) = (-(b.y - a.y) / len, (b.x - a.x) / len);
        let ctrl = Point { x: mid.x + nx * bend, y: mid.y + ny * bend };
        let start = a.towards(ctrl, NODE_RADIUS);
        let end = b.towards(ctrl, NODE_RADIUS);
        let _ = writeln!(
            svg,
            r#"<path d="M{:.1},{:.1} Q{:.1},{:.1} {:.1},{:.1}" fill="none" stroke="black" marker-end="url(#arrow)"/>"#,
            start.x, start.y, ctrl.x, ctrl.y, end.x, end.y
        );
        let at = Point {
            x: 0.25 * start.x + 0.5 * ctrl.x + 0.25 * end.x,
            y: 0.25 * start.y + 0.5 * ctrl.y + 0.25 * end.y,
        };
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" fill="steelblue">{text}</text>"#,
            at.x + nx * 8.0,
            at.y + ny * 8.0
        );
    }

    for q in nfa.initial_sorted().iter().copied() {
        let c = pos[q];
        let (dx, dy) = if n <= 1 { (-1.0, 0.0) } else { (angle(q).cos(), angle(q).sin()) };
        // the arrow comes in from outside, slightly off the loop direction
        let (ix, iy) = (dx * 0.7 - dy * 0.7, dy * 0.7 + dx * 0.7);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" marker-end="url(#arrow)"/>"#,
            c.x + ix * (NODE_RADIUS + 30.0),
            c.y + iy * (NODE_RADIUS + 30.0),
            c.x + ix * NODE_RADIUS,
            c.y + iy * NODE_RADIUS
        );
    }
    for (q, c) in pos.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.1}" cy="{:.1}" r="{NODE_RADIUS}" fill="white" stroke="black"/>"#,
            c.x, c.y
        );
        if nfa.is_final(q) {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.1}" cy="{:.1}" r="{}" fill="none" stroke="black"/>"#,
                c.x,
                c.y,
                NODE_RADIUS - 4.0
            );
        }
        let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{q}</text>"#, c.x, c.y + 4.0);
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escapes_markup() {
        assert_eq!(escape("a<b&\"c\">"), "a&lt;b&amp;&quot;c&quot;&gt;");
        assert_eq!(escape("\n"), "\\x0a");
    }

    #[test]
    fn one_state_with_a_loop() {
        let mut nfa = Nfa::with_states(1);
        nfa.add_initial(0);
        nfa.add_final(0);
        nfa.add_transition(0, 7, 0);
        let svg = render(&nfa, |s| format!("{s:?}")).unwrap();
        assert!(svg.contains("[7]"));
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn refuses_huge_automata() {
        assert!(render(&Nfa::with_states(MAX_DRAWN_STATES + 1), |_| String::new()).is_err());
    }
}
