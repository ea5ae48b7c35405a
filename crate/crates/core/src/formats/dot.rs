//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::nfa::{Nfa, State, Symbol, EPSILON};

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn label(symbol: Symbol, alphabet: Option<&Alphabet>) -> String {
    match alphabet.and_then(|a| a.name(symbol)) {
        Some(name) => name.to_owned(),
        None if symbol == EPSILON => "ε".to_owned(),
        None => symbol.to_string(),
    }
}

/// Renders `nfa` as a DOT digraph. Parallel edges between the same pair of
/// states are merged into one edge with a comma-separated label.
pub fn to_dot(nfa: &Nfa, alphabet: Option<&Alphabet>) -> String {
    let alphabet = alphabet.or(nfa.alphabet.as_ref());
    let mut out = String::from("digraph nfa {\n  rankdir=LR;\n");
    for q in 0..nfa.num_states() {
        let shape = if nfa.is_final(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  {q} [shape={shape}];");
    }
    for q in nfa.initial_sorted().iter() {
        let _ = writeln!(out, "  i{q} [shape=point];");
        let _ = writeln!(out, "  i{q} -> {q};");
    }
    let mut edges: BTreeMap<(State, State), Vec<String>> = BTreeMap::new();
    for t in nfa.transitions() {
        edges.entry((t.source, t.target)).or_default().push(label(t.symbol, alphabet));
    }
    for ((s, d), labels) in edges {
        let _ = writeln!(out, "  {s} -> {d} [label={}];", quote(&labels.join(", ")));
    }
    out.push_str("}\n");
    out
}
