use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::delta::{SymbolPost, SyncIterator, SyncMode};
use crate::error::Result;
use crate::nfa::{Nfa, State};
use crate::ord_vector::OrdVector;

use super::require_epsilon_free;

/// A set of states of the input automaton, used as one state of a subset
/// construction.
pub type Macrostate = OrdVector<State>;

/// Maps each generated macrostate to its state in the output automaton.
#[derive(Clone, Debug, Default)]
pub struct SubsetMap {
    ids: HashMap<Macrostate, State>,
    macrostates: Vec<Macrostate>,
}

impl SubsetMap {
    pub fn len(&self) -> usize {
        self.macrostates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.macrostates.is_empty()
    }

    pub fn get(&self, macrostate: &Macrostate) -> Option<State> {
        self.ids.get(macrostate).copied()
    }

    /// The macrostate represented by output state `q`.
    pub fn macrostate(&self, q: State) -> &Macrostate {
        &self.macrostates[q]
    }

    pub fn iter(&self) -> impl Iterator<Item = (State, &Macrostate)> {
        self.macrostates.iter().enumerate()
    }

    /// Returns the id of `macrostate`, inserting it if new; the flag tells
    /// whether it was inserted.
    fn get_or_insert(&mut self, macrostate: Macrostate) -> (State, bool) {
        match self.ids.entry(macrostate) {
            Entry::Occupied(e) => (*e.get(), false),
            Entry::Vacant(e) => {
                let id = self.macrostates.len();
                self.macrostates.push(e.key().clone());
                e.insert(id);
                (id, true)
            }
        }
    }
}

/// Subset construction restricted to the reachable macrostates.
///
/// The initial macrostate is the set of initial states (possibly empty).
/// Macrostates are explored breadth-first, and the post-image of each one is
/// produced by a synchronized walk over its members' state posts, so output
/// symbol posts are only ever appended.
pub fn determinize(nfa: &Nfa) -> Result<(Nfa, SubsetMap)> {
    require_epsilon_free(nfa)?;
    let mut map = SubsetMap::default();
    let mut dfa = Nfa::new();
    dfa.set_epsilon_symbols(nfa.epsilon_symbols());
    let is_final = |s: &Macrostate| s.iter().any(|&q| nfa.is_final(q));

    let init = nfa.initial_sorted();
    let init_final = is_final(&init);
    let (start, _) = map.get_or_insert(init);
    dfa.add_state();
    dfa.add_initial(start);
    if init_final {
        dfa.add_final(start);
    }

    let mut queue = VecDeque::from([start]);
    let mut sync = SyncIterator::new(SyncMode::Any);
    while let Some(id) = queue.pop_front() {
        sync.reset();
        for &q in map.macrostate(id).iter() {
            sync.push(nfa.state_post(q));
        }
        while sync.advance() {
            let targets = sync.unified_targets();
            let target_final = is_final(&targets);
            let (tid, fresh) = map.get_or_insert(targets);
            if fresh {
                dfa.add_state();
                if target_final {
                    dfa.add_final(tid);
                }
                queue.push_back(tid);
            }
            dfa.delta
                .state_post_mut(id)
                .push_back(SymbolPost::new(sync.symbol(), OrdVector::singleton(tid)));
        }
    }
    Ok((dfa, map))
}
