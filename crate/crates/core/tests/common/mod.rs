//! Reference models shared by the integration tests. Everything here works
//! on a plain list of triples and never calls into the algorithms under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use automata::{Nfa, State, Symbol, EPSILON};
use rand::Rng;

/// An automaton as bare data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawNfa {
    pub states: usize,
    pub transitions: BTreeSet<(State, Symbol, State)>,
    pub initial: BTreeSet<State>,
    pub finals: BTreeSet<State>,
}

impl RawNfa {
    pub fn to_nfa(&self) -> Nfa {
        Nfa::from_parts(
            self.states,
            self.transitions.iter().copied(),
            self.initial.iter().copied(),
            self.finals.iter().copied(),
        )
    }

    pub fn from_nfa(nfa: &Nfa) -> Self {
        Self {
            states: nfa.num_states(),
            transitions: nfa.transitions().map(|t| (t.source, t.symbol, t.target)).collect(),
            initial: nfa.initial().iter().collect(),
            finals: nfa.final_states().iter().collect(),
        }
    }

    fn eps_closure(&self, set: &BTreeSet<State>) -> BTreeSet<State> {
        let mut out = set.clone();
        let mut stack: Vec<State> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &(s, a, t) in &self.transitions {
                if s == q && a == EPSILON && out.insert(t) {
                    stack.push(t);
                }
            }
        }
        out
    }

    /// Subset simulation straight from the triple list.
    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut current = self.eps_closure(&self.initial);
        for &a in word {
            let next: BTreeSet<State> = self
                .transitions
                .iter()
                .filter(|&&(s, b, _)| b == a && current.contains(&s))
                .map(|&(_, _, t)| t)
                .collect();
            current = self.eps_closure(&next);
        }
        current.iter().any(|q| self.finals.contains(q))
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.transitions.iter().map(|&(_, a, _)| a).filter(|&a| a != EPSILON).collect()
    }
}

pub struct Shape {
    pub max_states: usize,
    pub symbols: u32,
    /// Expected outgoing transitions per state and symbol.
    pub density: f64,
    pub epsilon_probability: f64,
    pub final_probability: f64,
}

impl Default for Shape {
    fn default() -> Self {
        Self {
            max_states: 6,
            symbols: 3,
            density: 1.2,
            epsilon_probability: 0.0,
            final_probability: 0.3,
        }
    }
}

pub fn random_raw(rng: &mut impl Rng, shape: &Shape) -> RawNfa {
    let n = rng.gen_range(1..=shape.max_states);
    let p = (shape.density / n as f64).min(1.0);
    let mut transitions = BTreeSet::new();
    for s in 0..n {
        for t in 0..n {
            for a in 0..shape.symbols {
                if rng.gen_bool(p) {
                    transitions.insert((s, a, t));
                }
            }
            if shape.epsilon_probability > 0.0 && s != t && rng.gen_bool(shape.epsilon_probability / n as f64) {
                transitions.insert((s, EPSILON, t));
            }
        }
    }
    let mut initial: BTreeSet<State> = (0..n).filter(|_| rng.gen_bool(0.25)).collect();
    if initial.is_empty() && rng.gen_bool(0.9) {
        initial.insert(0);
    }
    let finals = (0..n).filter(|_| rng.gen_bool(shape.final_probability)).collect();
    RawNfa {
        states: n,
        transitions,
        initial,
        finals,
    }
}

pub fn random_nfa(rng: &mut impl Rng, shape: &Shape) -> (RawNfa, Nfa) {
    let raw = random_raw(rng, shape);
    let nfa = raw.to_nfa();
    (raw, nfa)
}

/// Every word over `0..symbols` of length at most `max_len`.
pub fn all_words(symbols: u32, max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * symbols as usize);
        for w in &layer {
            for a in 0..symbols {
                let mut v: Vec<Symbol> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Greatest fixpoint of the simulation conditions, recomputed from scratch
/// until nothing changes. `rel[p][q]` means q simulates p.
pub fn naive_simulation(raw: &RawNfa) -> Vec<Vec<bool>> {
    let n = raw.states;
    let post = |q: State, a: Symbol| -> Vec<State> {
        raw.transitions
            .iter()
            .filter(|&&(s, b, _)| s == q && b == a)
            .map(|&(_, _, t)| t)
            .collect()
    };
    let symbols = raw.symbols();
    let mut rel = vec![vec![true; n]; n];
    for p in 0..n {
        for q in 0..n {
            if raw.finals.contains(&p) && !raw.finals.contains(&q) {
                rel[p][q] = false;
            }
        }
    }
    loop {
        let mut changed = false;
        for p in 0..n {
            for q in 0..n {
                if !rel[p][q] {
                    continue;
                }
                let ok = symbols.iter().all(|&a| {
                    let qs = post(q, a);
                    post(p, a).iter().all(|&p2| qs.iter().any(|&q2| rel[p2][q2]))
                });
                if !ok {
                    rel[p][q] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

fn reach(n: usize, edges: impl Iterator<Item = (State, State)>, start: impl Iterator<Item = State>) -> Vec<bool> {
    let mut adj = vec![Vec::new(); n];
    for (s, t) in edges {
        adj[s].push(t);
    }
    let mut seen = vec![false; n];
    let mut queue: VecDeque<State> = VecDeque::new();
    for q in start {
        if !seen[q] {
            seen[q] = true;
            queue.push_back(q);
        }
    }
    while let Some(q) = queue.pop_front() {
        for &t in &adj[q] {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Useful states as forward-reachable ∩ co-reachable, with co-reachability
/// taken as forward reachability in the reversed automaton.
pub fn two_pass_useful(nfa: &Nfa) -> Vec<State> {
    let n = nfa.num_states();
    let forward = reach(n, nfa.transitions().map(|t| (t.source, t.target)), nfa.initial().iter());
    let reversed = automata::revert(nfa);
    let backward = reach(n, reversed.transitions().map(|t| (t.source, t.target)), reversed.initial().iter());
    (0..n).filter(|&q| forward[q] && backward[q]).collect()
}

/// Epsilon removal by forward closure of targets: `q -a-> r'` for every
/// `q -a-> r` and `r'` in the closure of `r`; initial states are closed too.
/// A different construction from the library's, which closes sources.
pub fn remove_epsilon_forward(raw: &RawNfa) -> RawNfa {
    let closure = |q: State| raw.eps_closure(&BTreeSet::from([q]));
    let mut transitions = BTreeSet::new();
    for &(s, a, t) in &raw.transitions {
        if a != EPSILON {
            for r in closure(t) {
                transitions.insert((s, a, r));
            }
        }
    }
    RawNfa {
        states: raw.states,
        transitions,
        initial: raw.eps_closure(&raw.initial),
        finals: raw.finals.clone(),
    }
}

/// Words of length ≤ `max_len` on which two models disagree.
pub fn first_disagreement(
    symbols: u32,
    max_len: usize,
    mut lhs: impl FnMut(&[Symbol]) -> bool,
    mut rhs: impl FnMut(&[Symbol]) -> bool,
) -> Option<Vec<Symbol>> {
    all_words(symbols, max_len).into_iter().find(|w| lhs(w) != rhs(w))
}

/// Checks DOT text against the subset of the DOT grammar the exporter may
/// produce: a single `digraph` with node and edge statements.
pub fn validate_dot(text: &str) -> Result<(), String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty output")?;
    let name = header
        .strip_prefix("digraph ")
        .and_then(|h| h.strip_suffix(" {"))
        .ok_or_else(|| format!("bad header {header:?}"))?;
    if !is_id(name) {
        return Err(format!("bad graph id {name:?}"));
    }
    let mut closed = false;
    let mut nodes = HashSet::new();
    let mut edges_to_check = Vec::new();
    for line in lines {
        if closed {
            return Err(format!("content after closing brace: {line:?}"));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        let stmt = line.trim().strip_suffix(';').ok_or_else(|| format!("missing ';' in {line:?}"))?;
        if let Some(rest) = stmt.strip_prefix("rankdir=") {
            if !is_id(rest) {
                return Err(format!("bad attribute {stmt:?}"));
            }
            continue;
        }
        let (body, attrs) = match stmt.find(" [") {
            Some(i) => (&stmt[..i], Some(&stmt[i + 2..])),
            None => (stmt, None),
        };
        if let Some(attrs) = attrs {
            let inner = attrs.strip_suffix(']').ok_or_else(|| format!("unclosed attribute list {stmt:?}"))?;
            check_attr(inner)?;
        }
        if let Some((s, t)) = body.split_once(" -> ") {
            if !is_id(s) || !is_id(t) {
                return Err(format!("bad edge {body:?}"));
            }
            edges_to_check.push((s.to_owned(), t.to_owned()));
        } else if is_id(body) {
            nodes.insert(body.to_owned());
        } else {
            return Err(format!("bad statement {stmt:?}"));
        }
    }
    if !closed {
        return Err("missing closing brace".into());
    }
    for (s, t) in edges_to_check {
        if !nodes.contains(&s) || !nodes.contains(&t) {
            return Err(format!("edge {s} -> {t} uses an undeclared node"));
        }
    }
    Ok(())
}

fn is_id(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        Some(c) if c.is_ascii_digit() => s.chars().all(|c| c.is_ascii_digit()),
        _ => false,
    }
}

fn check_attr(inner: &str) -> Result<(), String> {
    let (key, value) = inner.split_once('=').ok_or_else(|| format!("bad attribute {inner:?}"))?;
    if !is_id(key) {
        return Err(format!("bad attribute key {key:?}"));
    }
    if is_id(value) {
        return Ok(());
    }
    let body = value
        .strip_prefix('"')
        .and_then(|v| v.strip_suffix('"'))
        .ok_or_else(|| format!("bad attribute value {value:?}"))?;
    let mut escaped = false;
    for c in body.chars() {
        match (escaped, c) {
            (true, _) => escaped = false,
            (false, '\\') => escaped = true,
            (false, '"') => return Err(format!("unescaped quote in {value:?}")),
            _ => {}
        }
    }
    if escaped {
        return Err(format!("dangling escape in {value:?}"));
    }
    Ok(())
}

/// Whether two automata are equal up to a renaming of states. Brute force
/// over permutations; only for small automata.
pub fn isomorphic(a: &RawNfa, b: &RawNfa) -> bool {
    if a.states != b.states
        || a.transitions.len() != b.transitions.len()
        || a.initial.len() != b.initial.len()
        || a.finals.len() != b.finals.len()
    {
        return false;
    }
    let n = a.states;
    let mut perm: Vec<State> = (0..n).collect();
    let check = |perm: &[State]| {
        a.initial.iter().all(|&q| b.initial.contains(&perm[q]))
            && a.finals.iter().all(|&q| b.finals.contains(&perm[q]))
            && a
                .transitions
                .iter()
                .all(|&(s, x, t)| b.transitions.contains(&(perm[s], x, perm[t])))
    };
    permute(&mut perm, 0, &check)
}

fn permute(perm: &mut [State], k: usize, check: &impl Fn(&[State]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute(perm, k + 1, check) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}
