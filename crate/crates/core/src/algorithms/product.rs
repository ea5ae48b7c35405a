use std::collections::{HashMap, VecDeque};

use crate::delta::{SymbolPost, SyncIterator, SyncMode};
use crate::error::Result;
use crate::nfa::{Nfa, State};
use crate::ord_vector::OrdVector;

use super::require_epsilon_free;

/// Pairs of input states beyond this many cells use per-state hash maps.
pub const DENSE_PRODUCT_LIMIT: usize = 1 << 20;

const NONE: State = State::MAX;

#[derive(Clone, Debug)]
enum PairIndex {
    Dense { cols: usize, cells: Vec<State> },
    Sparse(Vec<HashMap<State, State>>),
}

/// Identity of each discovered product pair.
///
/// Small products use a dense two-dimensional array; larger ones a vector
/// indexed by the left state holding hash maps keyed by the right state.
#[derive(Clone, Debug)]
pub struct ProductMap {
    index: PairIndex,
    pairs: Vec<(State, State)>,
}

impl ProductMap {
    pub fn new(left_states: usize, right_states: usize) -> Self {
        let index = match left_states.checked_mul(right_states) {
            Some(cells) if cells <= DENSE_PRODUCT_LIMIT => PairIndex::Dense {
                cols: right_states,
                cells: vec![NONE; cells],
            },
            _ => PairIndex::Sparse(vec![HashMap::new(); left_states]),
        };
        Self {
            index,
            pairs: Vec::new(),
        }
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.index, PairIndex::Dense { .. })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, q: State, r: State) -> Option<State> {
        match &self.index {
            PairIndex::Dense { cols, cells } => cells.get(q * cols + r).copied().filter(|&s| s != NONE),
            PairIndex::Sparse(maps) => maps.get(q).and_then(|m| m.get(&r)).copied(),
        }
    }

    /// The input pair represented by product state `s`.
    pub fn pair(&self, s: State) -> (State, State) {
        self.pairs[s]
    }

    fn get_or_insert(&mut self, q: State, r: State) -> (State, bool) {
        let next = self.pairs.len();
        let slot = match &mut self.index {
            PairIndex::Dense { cols, cells } => &mut cells[q * *cols + r],
            PairIndex::Sparse(maps) => maps[q].entry(r).or_insert(NONE),
        };
        if *slot == NONE {
            *slot = next;
            self.pairs.push((q, r));
            (next, true)
        } else {
            (*slot, false)
        }
    }
}

/// Product automaton for `L(a) ∩ L(b)`, restricted to reachable pairs.
pub fn intersection(a: &Nfa, b: &Nfa) -> Result<(Nfa, ProductMap)> {
    require_epsilon_free(a)?;
    require_epsilon_free(b)?;
    Ok(product(a, b, false))
}

/// Product in which epsilon-like moves of either side are taken alone,
/// leaving the other side in place. Non-epsilon symbols synchronize.
pub fn intersection_preserving_epsilon(a: &Nfa, b: &Nfa) -> (Nfa, ProductMap) {
    product(a, b, true)
}

fn product(a: &Nfa, b: &Nfa, keep_epsilon: bool) -> (Nfa, ProductMap) {
    let mut map = ProductMap::new(a.num_states(), b.num_states());
    let mut out = Nfa::new();
    out.set_epsilon_symbols(a.epsilon_symbols().max(b.epsilon_symbols()));
    let mut queue = VecDeque::new();

    let discover = |map: &mut ProductMap, out: &mut Nfa, queue: &mut VecDeque<State>, q: State, r: State| {
        let (s, fresh) = map.get_or_insert(q, r);
        if fresh {
            out.add_state();
            if a.is_final(q) && b.is_final(r) {
                out.add_final(s);
            }
            queue.push_back(s);
        }
        s
    };

    for q in a.initial_sorted() {
        for r in b.initial_sorted() {
            let s = discover(&mut map, &mut out, &mut queue, q, r);
            out.add_initial(s);
        }
    }

    let mode = if keep_epsilon { SyncMode::Any } else { SyncMode::All };
    while let Some(s) = queue.pop_front() {
        let (q, r) = map.pair(s);
        let mut sync = SyncIterator::with_views(mode, [a.state_post(q), b.state_post(r)]);
        while sync.advance() {
            let symbol = sync.symbol();
            let current = sync.current();
            let mut targets = OrdVector::new();
            if keep_epsilon && out.is_epsilon(symbol) {
                for &t in a.symbol_post(q, symbol) {
                    targets.insert(discover(&mut map, &mut out, &mut queue, t, r));
                }
                for &t in b.symbol_post(r, symbol) {
                    targets.insert(discover(&mut map, &mut out, &mut queue, q, t));
                }
            } else if current.len() == 2 {
                for &t1 in current[0].targets.iter() {
                    for &t2 in current[1].targets.iter() {
                        // fresh states are the new maximum, so this is a push
                        targets.insert(discover(&mut map, &mut out, &mut queue, t1, t2));
                    }
                }
            }
            if !targets.is_empty() {
                out.delta.state_post_mut(s).push_back(SymbolPost::new(symbol, targets));
            }
        }
    }
    (out, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::is_lang_empty;
    use crate::nfa::EPSILON;

    #[test]
    fn disjoint_words_give_empty_product() {
        let ab = Nfa::from_word(&[0, 1]);
        let ba = Nfa::from_word(&[1, 0]);
        let (p, _) = intersection(&ab, &ba).unwrap();
        assert!(is_lang_empty(&p));
    }

    #[test]
    fn pair_map_both_layouts() {
        let mut dense = ProductMap::new(3, 3);
        let mut sparse = ProductMap::new(DENSE_PRODUCT_LIMIT, 2);
        assert!(dense.is_dense() && !sparse.is_dense());
        for m in [&mut dense, &mut sparse] {
            assert_eq!(m.get_or_insert(2, 1), (0, true));
            assert_eq!(m.get_or_insert(0, 1), (1, true));
            assert_eq!(m.get_or_insert(2, 1), (0, false));
            assert_eq!(m.get(0, 1), Some(1));
            assert_eq!(m.get(1, 1), None);
            assert_eq!(m.pair(1), (0, 1));
        }
    }

    #[test]
    fn epsilon_moves_interleave() {
        // a: 0 -eps-> 1 -x-> 2 ; b: 0 -x-> 1
        let a = Nfa::from_parts(3, [(0, EPSILON, 1), (1, 7, 2)], [0], [2]);
        let b = Nfa::from_parts(2, [(0, 7, 1)], [0], [1]);
        assert!(intersection(&a, &b).is_err());
        let (p, map) = intersection_preserving_epsilon(&a, &b);
        assert_eq!(map.len(), 3);
        assert!(crate::algorithms::is_in_lang(&p, &[7]));
        assert!(!crate::algorithms::is_in_lang(&p, &[]));
    }
}
