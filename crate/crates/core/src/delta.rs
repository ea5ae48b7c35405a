//! The three-layered transition relation.
//!
//! `Delta` is a state-indexed vector of [`StatePost`]s. A `StatePost` is a
//! symbol-ordered vector of [`SymbolPost`]s, and each `SymbolPost` holds one
//! symbol with its sorted, non-empty vector of targets. Epsilon is the
//! largest symbol value, so an epsilon post is always the last one.

use std::cmp::Ordering;

use crate::nfa::{State, Symbol, Transition};
use crate::ord_vector::OrdVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolPost {
    pub symbol: Symbol,
    pub targets: OrdVector<State>,
}

impl SymbolPost {
    pub fn new(symbol: Symbol, targets: OrdVector<State>) -> Self {
        Self { symbol, targets }
    }
}

/// `post(q)`: the outgoing symbol posts of one state, ascending by symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct StatePost {
    posts: Vec<SymbolPost>,
}

static EMPTY_STATE_POST: StatePost = StatePost { posts: Vec::new() };

impl StatePost {
    pub const fn new() -> Self {
        Self { posts: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.posts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.posts.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SymbolPost> {
        self.posts.iter()
    }

    pub fn as_slice(&self) -> &[SymbolPost] {
        &self.posts
    }

    pub fn last(&self) -> Option<&SymbolPost> {
        self.posts.last()
    }

    fn position(&self, symbol: Symbol) -> Result<usize, usize> {
        self.posts.binary_search_by(|p| p.symbol.cmp(&symbol))
    }

    pub fn find(&self, symbol: Symbol) -> Option<&SymbolPost> {
        self.position(symbol).ok().map(|i| &self.posts[i])
    }

    /// Targets of `symbol`, empty if there are none.
    pub fn targets(&self, symbol: Symbol) -> &[State] {
        self.find(symbol).map_or(&[], |p| p.targets.as_slice())
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.posts.iter().map(|p| p.symbol)
    }

    /// `(symbol, target)` pairs in order.
    pub fn moves(&self) -> impl Iterator<Item = (Symbol, State)> + '_ {
        self.posts
            .iter()
            .flat_map(|p| p.targets.iter().map(move |&t| (p.symbol, t)))
    }

    pub fn num_moves(&self) -> usize {
        self.posts.iter().map(|p| p.targets.len()).sum()
    }

    /// Appends a post whose symbol is larger than all present ones.
    ///
    /// # Panics
    /// If the symbol is out of order or the target set is empty.
    pub fn push_back(&mut self, post: SymbolPost) {
        assert!(!post.targets.is_empty(), "empty symbol posts are never stored");
        if let Some(last) = self.posts.last() {
            assert!(last.symbol < post.symbol, "symbol posts must ascend");
        }
        self.posts.push(post);
    }

    pub fn insert(&mut self, symbol: Symbol, target: State) -> bool {
        match self.posts.last() {
            Some(last) if last.symbol < symbol => {
                self.posts.push(SymbolPost::new(symbol, OrdVector::singleton(target)));
                true
            }
            None => {
                self.posts.push(SymbolPost::new(symbol, OrdVector::singleton(target)));
                true
            }
            _ => match self.position(symbol) {
                Ok(i) => self.posts[i].targets.insert(target),
                Err(i) => {
                    self.posts
                        .insert(i, SymbolPost::new(symbol, OrdVector::singleton(target)));
                    true
                }
            },
        }
    }

    pub fn remove(&mut self, symbol: Symbol, target: State) -> bool {
        let Ok(i) = self.position(symbol) else {
            return false;
        };
        let removed = self.posts[i].targets.remove(&target);
        if self.posts[i].targets.is_empty() {
            self.posts.remove(i);
        }
        removed
    }

    /// Merges `other` into `self` symbol by symbol.
    pub fn merge(&mut self, other: &StatePost) {
        if other.is_empty() {
            return;
        }
        let mut out = Vec::with_capacity(self.posts.len() + other.posts.len());
        let mut mine = std::mem::take(&mut self.posts).into_iter().peekable();
        let mut theirs = other.posts.iter().peekable();
        loop {
            match (mine.peek(), theirs.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(mine.next().unwrap()),
                (None, Some(_)) => out.push(theirs.next().unwrap().clone()),
                (Some(a), Some(b)) => match a.symbol.cmp(&b.symbol) {
                    Ordering::Less => out.push(mine.next().unwrap()),
                    Ordering::Greater => out.push(theirs.next().unwrap().clone()),
                    Ordering::Equal => {
                        let mut a = mine.next().unwrap();
                        a.targets.extend_union(&theirs.next().unwrap().targets);
                        out.push(a);
                    }
                },
            }
        }
        self.posts = out;
    }

    /// Keeps targets accepted by `keep` and renames them with `rename`,
    /// dropping posts left empty. `rename` must be monotone on kept targets.
    pub fn retain_and_rename(&mut self, mut keep: impl FnMut(State) -> bool, mut rename: impl FnMut(State) -> State) {
        self.posts.retain_mut(|p| {
            p.targets.retain(|&t| keep(t));
            p.targets.map_monotone(|t| *t = rename(*t));
            !p.targets.is_empty()
        });
    }

    pub(crate) fn posts_mut(&mut self) -> &mut Vec<SymbolPost> {
        &mut self.posts
    }
}

impl<'a> IntoIterator for &'a StatePost {
    type Item = &'a SymbolPost;
    type IntoIter = std::slice::Iter<'a, SymbolPost>;

    fn into_iter(self) -> Self::IntoIter {
        self.posts.iter()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Delta {
    post: Vec<StatePost>,
}

impl Delta {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_states(n: usize) -> Self {
        Self {
            post: vec![StatePost::new(); n],
        }
    }

    pub fn num_states(&self) -> usize {
        self.post.len()
    }

    /// Grows the state vector so that `0..n` are valid indices.
    pub fn ensure_states(&mut self, n: usize) {
        if self.post.len() < n {
            self.post.resize_with(n, StatePost::new);
        }
    }

    /// Adds a fresh state with no transitions and returns it.
    pub fn add_state(&mut self) -> State {
        self.post.push(StatePost::new());
        self.post.len() - 1
    }

    pub fn add(&mut self, source: State, symbol: Symbol, target: State) -> bool {
        self.ensure_states(source.max(target) + 1);
        self.post[source].insert(symbol, target)
    }

    pub fn remove(&mut self, source: State, symbol: Symbol, target: State) -> bool {
        match self.post.get_mut(source) {
            Some(sp) => sp.remove(symbol, target),
            None => false,
        }
    }

    pub fn contains(&self, source: State, symbol: Symbol, target: State) -> bool {
        self.state_post(source).targets(symbol).binary_search(&target).is_ok()
    }

    /// `post(q)`; an empty view for states out of range.
    pub fn state_post(&self, q: State) -> &StatePost {
        self.post.get(q).unwrap_or(&EMPTY_STATE_POST)
    }

    pub fn state_post_mut(&mut self, q: State) -> &mut StatePost {
        self.ensure_states(q + 1);
        &mut self.post[q]
    }

    /// `post(q, a)`; empty when absent.
    pub fn symbol_post(&self, q: State, symbol: Symbol) -> &[State] {
        self.state_post(q).targets(symbol)
    }

    pub fn posts(&self) -> &[StatePost] {
        &self.post
    }

    pub(crate) fn posts_mut(&mut self) -> &mut Vec<StatePost> {
        &mut self.post
    }

    pub fn from_posts(post: Vec<StatePost>) -> Self {
        Self { post }
    }

    /// All transitions ordered by `(source, symbol, target)`.
    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        self.post.iter().enumerate().flat_map(|(source, sp)| {
            sp.moves().map(move |(symbol, target)| Transition {
                source,
                symbol,
                target,
            })
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.post.iter().map(StatePost::num_moves).sum()
    }

    pub fn used_symbols(&self) -> OrdVector<Symbol> {
        self.post.iter().flat_map(StatePost::symbols).collect()
    }

    /// Appends `other`'s posts after the existing states, shifting every
    /// target of the appended part by the current state count.
    pub fn append_shifted(&mut self, other: &Delta) -> usize {
        let offset = self.post.len();
        self.post.reserve(other.post.len());
        for sp in &other.post {
            let mut sp = sp.clone();
            for p in sp.posts_mut() {
                p.targets.map_monotone(|t| *t += offset);
            }
            self.post.push(sp);
        }
        offset
    }
}

/// Whether a synchronized iteration yields symbols present in some view or
/// only symbols present in every view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SyncMode {
    Any,
    All,
}

/// Simultaneous ordered iteration over several state posts.
///
/// Each underlying vector is traversed once. Call [`advance`](Self::advance)
/// and then read [`symbol`](Self::symbol) and [`current`](Self::current).
pub struct SyncIterator<'a> {
    mode: SyncMode,
    views: Vec<&'a [SymbolPost]>,
    positions: Vec<usize>,
    current: Vec<&'a SymbolPost>,
    symbol: Symbol,
}

impl<'a> SyncIterator<'a> {
    pub fn new(mode: SyncMode) -> Self {
        Self {
            mode,
            views: Vec::new(),
            positions: Vec::new(),
            current: Vec::new(),
            symbol: 0,
        }
    }

    pub fn with_views(mode: SyncMode, views: impl IntoIterator<Item = &'a StatePost>) -> Self {
        let mut it = Self::new(mode);
        for v in views {
            it.push(v);
        }
        it
    }

    pub fn push(&mut self, view: &'a StatePost) {
        self.views.push(view.as_slice());
        self.positions.push(0);
    }

    /// Clears views so the iterator can be reused without reallocating.
    pub fn reset(&mut self) {
        self.views.clear();
        self.positions.clear();
        self.current.clear();
    }

    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    /// Symbol posts of the current symbol, in view order.
    pub fn current(&self) -> &[&'a SymbolPost] {
        &self.current
    }

    /// Union of the targets of the current symbol posts.
    pub fn unified_targets(&self) -> OrdVector<State> {
        match self.current.as_slice() {
            [] => OrdVector::new(),
            [one] => one.targets.clone(),
            many => {
                let mut all: Vec<State> = Vec::with_capacity(many.iter().map(|p| p.targets.len()).sum());
                for p in many {
                    all.extend_from_slice(&p.targets);
                }
                OrdVector::from_vec(all)
            }
        }
    }

    pub fn advance(&mut self) -> bool {
        self.current.clear();
        match self.mode {
            SyncMode::Any => self.advance_any(),
            SyncMode::All => self.advance_all(),
        }
    }

    fn advance_any(&mut self) -> bool {
        let min = self
            .views
            .iter()
            .zip(&self.positions)
            .filter_map(|(v, &i)| v.get(i).map(|p| p.symbol))
            .min();
        let Some(min) = min else {
            return false;
        };
        self.symbol = min;
        for (v, i) in self.views.iter().zip(self.positions.iter_mut()) {
            if let Some(p) = v.get(*i) {
                if p.symbol == min {
                    self.current.push(p);
                    *i += 1;
                }
            }
        }
        true
    }

    fn advance_all(&mut self) -> bool {
        if self.views.is_empty() {
            return false;
        }
        loop {
            let mut max = 0;
            for (v, &i) in self.views.iter().zip(&self.positions) {
                match v.get(i) {
                    Some(p) => max = max.max(p.symbol),
                    None => return false,
                }
            }
            let mut aligned = true;
            for (v, i) in self.views.iter().zip(self.positions.iter_mut()) {
                while *i < v.len() && v[*i].symbol < max {
                    *i += 1;
                }
                match v.get(*i) {
                    None => return false,
                    Some(p) if p.symbol != max => aligned = false,
                    Some(_) => {}
                }
            }
            if aligned {
                self.symbol = max;
                for (v, i) in self.views.iter().zip(self.positions.iter_mut()) {
                    self.current.push(&v[*i]);
                    *i += 1;
                }
                return true;
            }
        }
    }
}

impl<'a> Iterator for SyncIterator<'a> {
    type Item = (Symbol, Vec<&'a OrdVector<State>>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.advance() {
            Some((self.symbol, self.current.iter().map(|p| &p.targets).collect()))
        } else {
            None
        }
    }
}
