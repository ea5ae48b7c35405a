//! Maximal simulation preorder and quotienting by simulation equivalence.

use std::collections::HashMap;

use crate::algorithms::require_epsilon_free;
use crate::error::Result;
use crate::nfa::{Nfa, State};

/// `n × n` relation where `simulates(p, q)` means `q` simulates `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimulationRelation {
    n: usize,
    bits: Vec<bool>,
}

impl std::fmt::Debug for SimulationRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut l = f.debug_list();
        for p in 0..self.n {
            let row: String = (0..self.n).map(|q| if self.simulates(p, q) { '1' } else { '0' }).collect();
            l.entry(&row);
        }
        l.finish()
    }
}

impl SimulationRelation {
    pub fn from_fn(n: usize, f: impl Fn(State, State) -> bool) -> Self {
        let mut bits = vec![false; n * n];
        for p in 0..n {
            for q in 0..n {
                bits[p * n + q] = f(p, q);
            }
        }
        Self { n, bits }
    }

    pub fn num_states(&self) -> usize {
        self.n
    }

    /// Whether `q` simulates `p`.
    pub fn simulates(&self, p: State, q: State) -> bool {
        self.bits[p * self.n + q]
    }

    pub fn equivalent(&self, p: State, q: State) -> bool {
        self.simulates(p, q) && self.simulates(q, p)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (State, State)> + '_ {
        (0..self.n * self.n).filter(|&i| self.bits[i]).map(|i| (i / self.n, i % self.n))
    }
}

/// Computes the maximal simulation by counter-based refinement.
///
/// Starts from all pairs compatible on finality and on enabled symbols, and
/// keeps for each `(a, q, p')` the number of `a`-successors of `q` that still
/// simulate `p'`. When a counter drops to zero, every `a`-predecessor `p` of
/// `p'` stops being simulated by `q`.
pub fn compute_simulation(nfa: &Nfa) -> Result<SimulationRelation> {
    require_epsilon_free(nfa)?;
    let n = nfa.num_states();
    let symbols: Vec<_> = nfa.used_symbols().into_vec();
    let k = symbols.len();
    let symbol_index: HashMap<_, _> = symbols.iter().enumerate().map(|(i, &a)| (a, i)).collect();

    // pre[a * n + r] = states with an a-move into r
    let mut pre: Vec<Vec<State>> = vec![Vec::new(); k * n];
    for t in nfa.transitions() {
        pre[symbol_index[&t.symbol] * n + t.target].push(t.source);
    }

    let mut sim = vec![false; n * n];
    for p in 0..n {
        let p_post = nfa.state_post(p);
        for q in 0..n {
            let q_post = nfa.state_post(q);
            sim[p * n + q] = (!nfa.is_final(p) || nfa.is_final(q))
                && p_post.symbols().all(|a| q_post.find(a).is_some());
        }
    }

    // count[(a * n + q) * n + p'] = |{q' in post(q, a) : sim[p'][q']}|
    let mut count = vec![0u32; k * n * n];
    for (ai, &a) in symbols.iter().enumerate() {
        for q in 0..n {
            let base = (ai * n + q) * n;
            for &q2 in nfa.symbol_post(q, a) {
                for p2 in 0..n {
                    if sim[p2 * n + q2] {
                        count[base + p2] += 1;
                    }
                }
            }
        }
    }

    let mut removed: Vec<(State, State)> = Vec::new();
    let cut = |sim: &mut [bool], removed: &mut Vec<(State, State)>, ai: usize, q: State, p2: State| {
        for &p in &pre[ai * n + p2] {
            if sim[p * n + q] {
                sim[p * n + q] = false;
                removed.push((p, q));
            }
        }
    };

    for ai in 0..k {
        for q in 0..n {
            let base = (ai * n + q) * n;
            for p2 in 0..n {
                if count[base + p2] == 0 {
                    cut(&mut sim, &mut removed, ai, q, p2);
                }
            }
        }
    }

    while let Some((p2, q2)) = removed.pop() {
        for ai in 0..k {
            for &q in &pre[ai * n + q2] {
                let c = &mut count[(ai * n + q) * n + p2];
                *c -= 1;
                if *c == 0 {
                    cut(&mut sim, &mut removed, ai, q, p2);
                }
            }
        }
    }

    Ok(SimulationRelation { n, bits: sim })
}

/// Merges simulation-equivalent states. Returns the quotient and the map
/// from old states to their classes; classes are numbered by their
/// smallest member.
pub fn reduce_simulation(nfa: &Nfa) -> Result<(Nfa, Vec<State>)> {
    let sim = compute_simulation(nfa)?;
    let n = nfa.num_states();
    let mut class = vec![usize::MAX; n];
    let mut classes = 0;
    for p in 0..n {
        if class[p] != usize::MAX {
            continue;
        }
        for q in p..n {
            if class[q] == usize::MAX && sim.equivalent(p, q) {
                class[q] = classes;
            }
        }
        classes += 1;
    }

    let mut out = Nfa::with_states(classes);
    out.set_epsilon_symbols(nfa.epsilon_symbols());
    out.alphabet = nfa.alphabet.clone();
    for t in nfa.transitions() {
        out.add_transition(class[t.source], t.symbol, class[t.target]);
    }
    for q in nfa.initial().iter() {
        out.add_initial(class[q]);
    }
    for q in nfa.final_states().iter() {
        out.add_final(class[q]);
    }
    Ok((out, class))
}
