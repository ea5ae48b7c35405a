use std::collections::VecDeque;

use crate::nfa::{Nfa, State, Symbol, Word};
use crate::sparse_set::SparseSet;

/// Breadth-first search for a reachable final state. Epsilon moves cost
/// nothing (0-1 BFS), so the result is a shortest accepted word, or `None`
/// when the language is empty.
pub fn emptiness_witness(nfa: &Nfa) -> Option<Word> {
    let n = nfa.num_states();
    let mut parent: Vec<Option<(State, Symbol)>> = vec![None; n];
    let mut dist = vec![usize::MAX; n];
    let mut done = vec![false; n];
    let mut queue = VecDeque::new();
    for q in nfa.initial_sorted() {
        dist[q] = 0;
        queue.push_back(q);
    }
    while let Some(q) = queue.pop_front() {
        if done[q] {
            continue;
        }
        done[q] = true;
        if nfa.is_final(q) {
            let mut word = Word::new();
            let mut cur = q;
            while let Some((p, a)) = parent[cur] {
                if !nfa.is_epsilon(a) {
                    word.push(a);
                }
                cur = p;
            }
            word.reverse();
            return Some(word);
        }
        for (symbol, t) in nfa.state_post(q).moves() {
            let epsilon = nfa.is_epsilon(symbol);
            let d = dist[q] + usize::from(!epsilon);
            if d < dist[t] {
                dist[t] = d;
                parent[t] = Some((q, symbol));
                if epsilon {
                    queue.push_front(t);
                } else {
                    queue.push_back(t);
                }
            }
        }
    }
    None
}

pub fn is_lang_empty(nfa: &Nfa) -> bool {
    emptiness_witness(nfa).is_none()
}

fn close_under_epsilon(nfa: &Nfa, set: &mut SparseSet) {
    let mut stack: Vec<State> = set.iter().collect();
    while let Some(p) = stack.pop() {
        for post in nfa.state_post(p).iter().rev() {
            if !nfa.is_epsilon(post.symbol) {
                break;
            }
            for &t in post.targets.iter() {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
}

/// Whether `word` has an accepting run; epsilon moves may interleave.
pub fn is_in_lang(nfa: &Nfa, word: &[Symbol]) -> bool {
    let n = nfa.num_states();
    let mut current = SparseSet::with_domain(n);
    let mut next = SparseSet::with_domain(n);
    current.extend(nfa.initial().iter());
    close_under_epsilon(nfa, &mut current);
    for &a in word {
        next.clear();
        for q in current.iter() {
            next.extend(nfa.symbol_post(q, a).iter().copied());
        }
        close_under_epsilon(nfa, &mut next);
        std::mem::swap(&mut current, &mut next);
        if current.is_empty() {
            return false;
        }
    }
    let accepted = current.iter().any(|q| nfa.is_final(q));
    accepted
}
