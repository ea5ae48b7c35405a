use crate::delta::{SymbolPost, SyncIterator, SyncMode};
use crate::nfa::{Nfa, State};
use crate::sparse_set::SparseSet;

/// States reachable from `q` using only epsilon-like moves, `q` included.
pub fn epsilon_closure(nfa: &Nfa, q: State) -> Vec<State> {
    let mut seen = SparseSet::with_domain(nfa.num_states());
    let mut stack = vec![q];
    seen.insert(q);
    while let Some(p) = stack.pop() {
        for post in nfa.state_post(p).iter().rev() {
            if !nfa.is_epsilon(post.symbol) {
                break;
            }
            for &t in post.targets.iter() {
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
    let mut closure: Vec<State> = seen.iter().collect();
    closure.sort_unstable();
    closure
}

/// Removes epsilon-like transitions.
///
/// `post'(q, a)` becomes the union of `post(p, a)` over the epsilon closure
/// of `q`, and `q` turns final when its closure meets a final state.
pub fn remove_epsilon(nfa: &Nfa) -> Nfa {
    if !nfa.has_epsilon_transitions() {
        return nfa.clone();
    }
    let mut out = Nfa::with_states(nfa.num_states());
    out.set_epsilon_symbols(nfa.epsilon_symbols());
    out.alphabet = nfa.alphabet.clone();
    for q in nfa.initial().iter() {
        out.add_initial(q);
    }
    let mut sync = SyncIterator::new(SyncMode::Any);
    for q in 0..nfa.num_states() {
        let closure = epsilon_closure(nfa, q);
        if closure.iter().any(|&p| nfa.is_final(p)) {
            out.add_final(q);
        }
        sync.reset();
        for &p in &closure {
            sync.push(nfa.state_post(p));
        }
        while sync.advance() {
            if nfa.is_epsilon(sync.symbol()) {
                break;
            }
            out.delta
                .state_post_mut(q)
                .push_back(SymbolPost::new(sync.symbol(), sync.unified_targets()));
        }
    }
    out
}
