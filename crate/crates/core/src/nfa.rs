use std::fmt;

use crate::alphabet::Alphabet;
use crate::delta::{Delta, StatePost};
use crate::ord_vector::OrdVector;
use crate::sparse_set::SparseSet;

pub type State = usize;
pub type Symbol = u32;
pub type Word = Vec<Symbol>;

/// The empty-word symbol: the largest representable symbol, so its post is
/// always last in a [`StatePost`].
pub const EPSILON: Symbol = Symbol::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub source: State,
    pub symbol: Symbol,
    pub target: State,
}

impl Transition {
    pub fn new(source: State, symbol: Symbol, target: State) -> Self {
        Self {
            source,
            symbol,
            target,
        }
    }
}

impl From<(State, Symbol, State)> for Transition {
    fn from((source, symbol, target): (State, Symbol, State)) -> Self {
        Self::new(source, symbol, target)
    }
}

/// A nondeterministic finite automaton over integer states and symbols.
///
/// States are `0..num_states()`; the transition relation grows on demand.
/// Symbols in `EPSILON - (k - 1) ..= EPSILON` are epsilon-like, where `k`
/// is [`epsilon_symbols`](Self::epsilon_symbols) (1 by default).
#[derive(Clone)]
pub struct Nfa {
    pub delta: Delta,
    initial: SparseSet,
    final_states: SparseSet,
    pub alphabet: Option<Alphabet>,
    epsilon_symbols: u32,
}

impl Default for Nfa {
    fn default() -> Self {
        Self {
            delta: Delta::new(),
            initial: SparseSet::new(),
            final_states: SparseSet::new(),
            alphabet: None,
            epsilon_symbols: 1,
        }
    }
}

impl PartialEq for Nfa {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta
            && self.initial == other.initial
            && self.final_states == other.final_states
            && self.epsilon_symbols == other.epsilon_symbols
    }
}

impl Eq for Nfa {}

impl fmt::Debug for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Nfa")
            .field("num_states", &self.num_states())
            .field("initial", &self.initial)
            .field("final", &self.final_states)
            .field("transitions", &self.delta.transitions().map(|t| (t.source, t.symbol, t.target)).collect::<Vec<_>>())
            .finish()
    }
}

impl Nfa {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_states(n: usize) -> Self {
        Self {
            delta: Delta::with_states(n),
            ..Self::default()
        }
    }

    /// Builds an automaton from its parts. `num_states` is a lower bound;
    /// any state mentioned by the other arguments is added as well.
    pub fn from_parts(
        num_states: usize,
        transitions: impl IntoIterator<Item = (State, Symbol, State)>,
        initial: impl IntoIterator<Item = State>,
        final_states: impl IntoIterator<Item = State>,
    ) -> Self {
        let mut nfa = Self::with_states(num_states);
        for (q, a, r) in transitions {
            nfa.delta.add(q, a, r);
        }
        for q in initial {
            nfa.add_initial(q);
        }
        for q in final_states {
            nfa.add_final(q);
        }
        nfa
    }

    pub fn num_states(&self) -> usize {
        self.delta.num_states()
    }

    pub fn add_state(&mut self) -> State {
        self.delta.add_state()
    }

    pub fn add_transition(&mut self, source: State, symbol: Symbol, target: State) -> bool {
        self.delta.add(source, symbol, target)
    }

    pub fn remove_transition(&mut self, source: State, symbol: Symbol, target: State) -> bool {
        self.delta.remove(source, symbol, target)
    }

    pub fn has_transition(&self, source: State, symbol: Symbol, target: State) -> bool {
        self.delta.contains(source, symbol, target)
    }

    pub fn state_post(&self, q: State) -> &StatePost {
        self.delta.state_post(q)
    }

    pub fn symbol_post(&self, q: State, symbol: Symbol) -> &[State] {
        self.delta.symbol_post(q, symbol)
    }

    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        self.delta.transitions()
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.num_transitions()
    }

    pub fn initial(&self) -> &SparseSet {
        &self.initial
    }

    pub fn final_states(&self) -> &SparseSet {
        &self.final_states
    }

    pub fn is_initial(&self, q: State) -> bool {
        self.initial.contains(q)
    }

    pub fn is_final(&self, q: State) -> bool {
        self.final_states.contains(q)
    }

    pub fn add_initial(&mut self, q: State) -> bool {
        self.delta.ensure_states(q + 1);
        self.initial.insert(q)
    }

    pub fn add_final(&mut self, q: State) -> bool {
        self.delta.ensure_states(q + 1);
        self.final_states.insert(q)
    }

    pub fn remove_initial(&mut self, q: State) -> bool {
        self.initial.remove(q)
    }

    pub fn remove_final(&mut self, q: State) -> bool {
        self.final_states.remove(q)
    }

    pub fn clear_initial(&mut self) {
        self.initial.clear();
    }

    pub fn clear_final(&mut self) {
        self.final_states.clear();
    }

    pub(crate) fn replace_initial_final(&mut self, initial: SparseSet, final_states: SparseSet) {
        self.initial = initial;
        self.final_states = final_states;
    }

    pub fn initial_sorted(&self) -> OrdVector<State> {
        OrdVector::from_sorted_unchecked(self.initial.sorted())
    }

    pub fn final_sorted(&self) -> OrdVector<State> {
        OrdVector::from_sorted_unchecked(self.final_states.sorted())
    }

    pub fn epsilon_symbols(&self) -> u32 {
        self.epsilon_symbols
    }

    /// Declares how many epsilon-like symbols (counting down from
    /// [`EPSILON`]) this automaton uses. At least one is always reserved.
    pub fn set_epsilon_symbols(&mut self, count: u32) {
        self.epsilon_symbols = count.max(1);
    }

    pub fn is_epsilon(&self, symbol: Symbol) -> bool {
        symbol >= EPSILON - (self.epsilon_symbols - 1)
    }

    pub fn has_epsilon_transitions(&self) -> bool {
        self.delta
            .posts()
            .iter()
            .any(|sp| sp.last().is_some_and(|p| self.is_epsilon(p.symbol)))
    }

    /// Symbols appearing on transitions, epsilon-like ones excluded.
    pub fn used_symbols(&self) -> OrdVector<Symbol> {
        let mut symbols = self.delta.used_symbols();
        symbols.retain(|&s| !self.is_epsilon(s));
        symbols
    }

    /// `|I| <= 1`, no epsilon moves and at most one target per symbol post.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1
            && !self.has_epsilon_transitions()
            && self
                .delta
                .posts()
                .iter()
                .all(|sp| sp.iter().all(|p| p.targets.len() == 1))
    }

    /// Every state has a move on every symbol of `alphabet`.
    pub fn is_complete(&self, alphabet: &OrdVector<Symbol>) -> bool {
        self.delta.posts().iter().all(|sp| {
            let symbols: OrdVector<Symbol> = sp.symbols().collect();
            alphabet.is_subset_of(&symbols)
        })
    }

    /// An automaton with one initial-and-final state and self-loops over `alphabet`.
    pub fn universal(alphabet: &OrdVector<Symbol>) -> Self {
        Self::from_parts(1, alphabet.iter().map(|&a| (0, a, 0)), [0], [0])
    }

    /// An automaton accepting exactly `word`.
    pub fn from_word(word: &[Symbol]) -> Self {
        Self::from_parts(
            word.len() + 1,
            word.iter().enumerate().map(|(i, &a)| (i, a, i + 1)),
            [0],
            [word.len()],
        )
    }
}
