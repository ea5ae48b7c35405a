//! Antichain-based language inclusion and universality.
//!
//! `L(a) ⊆ L(b)` is decided by exploring pairs `(q, S)` of a state of `a`
//! and a macrostate of `b`'s subset construction, on the fly. A pair with a
//! final `q` and a non-final `S` witnesses non-inclusion. A pair is pruned
//! when some stored `(q, S')` has `S' ⊆ S`; storing a new set evicts its
//! stored supersets.

use std::collections::VecDeque;

use crate::algorithms::{complement, emptiness_witness, intersection, require_epsilon_free, Macrostate};
use crate::error::Result;
use crate::nfa::{Nfa, State, Symbol, Word};
use crate::ord_vector::OrdVector;

/// Outcome of inserting into an [`AntichainStore`].
#[derive(Debug, PartialEq, Eq)]
pub enum Insertion<T> {
    /// A stored subset already covers the new set; nothing changed.
    Subsumed,
    /// The set was stored; payloads of the evicted supersets are returned.
    Inserted { evicted: Vec<T> },
}

/// Per-state antichains of macrostates.
#[derive(Clone, Debug)]
pub struct AntichainStore<T = ()> {
    incl_map: Vec<Vec<(Macrostate, T)>>,
}

impl<T> Default for AntichainStore<T> {
    fn default() -> Self {
        Self { incl_map: Vec::new() }
    }
}

impl<T> AntichainStore<T> {
    pub fn new(num_states: usize) -> Self {
        let mut incl_map = Vec::with_capacity(num_states);
        incl_map.resize_with(num_states, Vec::new);
        Self { incl_map }
    }

    pub fn insert(&mut self, q: State, set: Macrostate, payload: T) -> Insertion<T> {
        if q >= self.incl_map.len() {
            self.incl_map.resize_with(q + 1, Vec::new);
        }
        let bucket = &mut self.incl_map[q];
        if bucket.iter().any(|(stored, _)| stored.is_subset_of(&set)) {
            return Insertion::Subsumed;
        }
        let mut evicted = Vec::new();
        let mut i = 0;
        while i < bucket.len() {
            if set.is_subset_of(&bucket[i].0) {
                evicted.push(bucket.swap_remove(i).1);
            } else {
                i += 1;
            }
        }
        bucket.push((set, payload));
        Insertion::Inserted { evicted }
    }

    pub fn sets(&self, q: State) -> impl Iterator<Item = &Macrostate> {
        self.incl_map.get(q).into_iter().flatten().map(|(s, _)| s)
    }

    pub fn len(&self) -> usize {
        self.incl_map.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// No bucket holds two comparable sets.
    pub fn is_antichain(&self) -> bool {
        self.incl_map.iter().all(|bucket| {
            bucket.iter().enumerate().all(|(i, (x, _))| {
                bucket
                    .iter()
                    .enumerate()
                    .all(|(j, (y, _))| i == j || !x.is_subset_of(y))
            })
        })
    }
}

/// Order in which pending pairs are explored.
pub trait Worklist {
    fn push(&mut self, id: usize, set_size: usize);
    fn pop(&mut self) -> Option<usize>;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct FifoWorklist {
    queue: VecDeque<usize>,
}

impl Worklist for FifoWorklist {
    fn push(&mut self, id: usize, _set_size: usize) {
        self.queue.push_back(id);
    }

    fn pop(&mut self) -> Option<usize> {
        self.queue.pop_front()
    }

    fn len(&self) -> usize {
        self.queue.len()
    }
}

/// Pops a pair with the smallest macrostate first; ties are FIFO.
/// Backed by one queue per macrostate size.
#[derive(Clone, Debug, Default)]
pub struct MinSizeWorklist {
    buckets: Vec<VecDeque<usize>>,
    lowest: usize,
    len: usize,
}

impl Worklist for MinSizeWorklist {
    fn push(&mut self, id: usize, set_size: usize) {
        if set_size >= self.buckets.len() {
            self.buckets.resize_with(set_size + 1, VecDeque::new);
        }
        self.buckets[set_size].push_back(id);
        self.lowest = self.lowest.min(set_size);
        self.len += 1;
    }

    fn pop(&mut self) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        while self.buckets[self.lowest].is_empty() {
            self.lowest += 1;
        }
        self.len -= 1;
        self.buckets[self.lowest].pop_front()
    }

    fn len(&self) -> usize {
        self.len
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WorklistPolicy {
    #[default]
    MinSize,
    Fifo,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InclusionStats {
    /// Pairs taken from the worklist and expanded.
    pub pairs_explored: usize,
    /// Pairs that survived subsumption and were stored.
    pub pairs_stored: usize,
    /// Stored pairs later evicted by a smaller set.
    pub pairs_evicted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionResult {
    pub included: bool,
    /// A word in `L(a) \ L(b)` when inclusion fails.
    pub counterexample: Option<Word>,
    pub stats: InclusionStats,
}

struct Node {
    q: State,
    set: Macrostate,
    parent: Option<usize>,
    symbol: Symbol,
    alive: bool,
}

struct Search<'a, W> {
    a: &'a Nfa,
    b: &'a Nfa,
    nodes: Vec<Node>,
    store: AntichainStore<usize>,
    worklist: W,
    stats: InclusionStats,
}

impl<W: Worklist> Search<'_, W> {
    fn word_to(&self, mut id: usize, last: Option<Symbol>) -> Word {
        let mut word: Word = last.into_iter().collect();
        while let Some(p) = self.nodes[id].parent {
            word.push(self.nodes[id].symbol);
            id = p;
        }
        word.reverse();
        word
    }

    /// Handles a freshly generated pair; returns a counterexample if found.
    fn discover(&mut self, q: State, set: Macrostate, parent: Option<usize>, symbol: Symbol) -> Option<Word> {
        if self.a.is_final(q) && !set.iter().any(|&s| self.b.is_final(s)) {
            return Some(match parent {
                Some(p) => self.word_to(p, Some(symbol)),
                None => Word::new(),
            });
        }
        let id = self.nodes.len();
        match self.store.insert(q, set.clone(), id) {
            Insertion::Subsumed => None,
            Insertion::Inserted { evicted } => {
                self.stats.pairs_stored += 1;
                self.stats.pairs_evicted += evicted.len();
                for e in evicted {
                    self.nodes[e].alive = false;
                }
                self.worklist.push(id, set.len());
                self.nodes.push(Node {
                    q,
                    set,
                    parent,
                    symbol,
                    alive: true,
                });
                None
            }
        }
    }

    fn run(&mut self) -> Option<Word> {
        let b_initial = self.b.initial_sorted();
        for q in self.a.initial_sorted() {
            if let Some(w) = self.discover(q, b_initial.clone(), None, 0) {
                return Some(w);
            }
        }
        let mut buffer = Vec::new();
        while let Some(id) = self.worklist.pop() {
            if !self.nodes[id].alive {
                continue;
            }
            self.stats.pairs_explored += 1;
            let q = self.nodes[id].q;
            let set = self.nodes[id].set.clone();
            for post in self.a.state_post(q).iter() {
                buffer.clear();
                for &s in set.iter() {
                    buffer.extend_from_slice(self.b.symbol_post(s, post.symbol));
                }
                let successor = OrdVector::from_vec(std::mem::take(&mut buffer));
                for &t in post.targets.iter() {
                    if let Some(w) = self.discover(t, successor.clone(), Some(id), post.symbol) {
                        return Some(w);
                    }
                }
            }
        }
        None
    }
}

fn search<W: Worklist>(a: &Nfa, b: &Nfa, worklist: W) -> InclusionResult {
    let mut s = Search {
        a,
        b,
        nodes: Vec::new(),
        store: AntichainStore::new(a.num_states()),
        worklist,
        stats: InclusionStats::default(),
    };
    let counterexample = s.run();
    debug_assert!(s.store.is_antichain());
    InclusionResult {
        included: counterexample.is_none(),
        counterexample,
        stats: s.stats,
    }
}

/// Decides `L(a) ⊆ L(b)` with the given exploration policy.
pub fn is_included_with(a: &Nfa, b: &Nfa, policy: WorklistPolicy) -> Result<InclusionResult> {
    require_epsilon_free(a)?;
    require_epsilon_free(b)?;
    Ok(match policy {
        WorklistPolicy::MinSize => search(a, b, MinSizeWorklist::default()),
        WorklistPolicy::Fifo => search(a, b, FifoWorklist::default()),
    })
}

/// Decides `L(a) ⊆ L(b)`; on failure returns a word of `L(a) \ L(b)`.
pub fn is_included(a: &Nfa, b: &Nfa) -> Result<(bool, Option<Word>)> {
    let r = is_included_with(a, b, WorklistPolicy::MinSize)?;
    Ok((r.included, r.counterexample))
}

/// Decides `L(nfa) = alphabet*`; on failure returns a rejected word.
pub fn is_universal(nfa: &Nfa, alphabet: &OrdVector<Symbol>) -> Result<(bool, Option<Word>)> {
    is_included(&Nfa::universal(alphabet), nfa)
}

pub fn is_universal_with(nfa: &Nfa, alphabet: &OrdVector<Symbol>, policy: WorklistPolicy) -> Result<InclusionResult> {
    is_included_with(&Nfa::universal(alphabet), nfa, policy)
}

/// Inclusion through full determinization: `L(a) ∩ co-L(b)` must be empty.
/// The alphabet is the union of symbols used by both automata.
pub fn is_included_naive(a: &Nfa, b: &Nfa) -> Result<(bool, Option<Word>)> {
    let sigma = a.used_symbols().union(&b.used_symbols());
    let co_b = complement(b, &sigma)?;
    let (product, _) = intersection(a, &co_b)?;
    let witness = emptiness_witness(&product);
    Ok((witness.is_none(), witness))
}
