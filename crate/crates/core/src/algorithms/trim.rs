use crate::nfa::{Nfa, State};
use crate::ord_vector::OrdVector;
use crate::sparse_set::SparseSet;

/// Old-to-new state names produced by trimming.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Renaming {
    map: Vec<Option<State>>,
    len: usize,
}

impl Renaming {
    pub fn get(&self, old: State) -> Option<State> {
        self.map.get(old).copied().flatten()
    }

    /// Number of surviving states.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_identity(&self) -> bool {
        self.len == self.map.len() && self.map.iter().enumerate().all(|(i, &m)| m == Some(i))
    }

    /// `(old, new)` pairs for surviving states.
    pub fn iter(&self) -> impl Iterator<Item = (State, State)> + '_ {
        self.map.iter().enumerate().filter_map(|(o, &n)| n.map(|n| (o, n)))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DfsStats {
    /// Transitions examined by the search.
    pub edge_visits: usize,
    /// States entered by the search.
    pub state_visits: usize,
}

const UNVISITED: usize = usize::MAX;

struct Frame {
    state: State,
    post: usize,
    target: usize,
}

struct Search<'a> {
    nfa: &'a Nfa,
    index: Vec<usize>,
    lowlink: Vec<usize>,
    on_stack: Vec<bool>,
    useful: Vec<bool>,
    scc_stack: Vec<State>,
    call_stack: Vec<Frame>,
    next_index: usize,
    stats: DfsStats,
}

impl Search<'_> {
    fn enter(&mut self, q: State) {
        self.index[q] = self.next_index;
        self.lowlink[q] = self.next_index;
        self.next_index += 1;
        self.on_stack[q] = true;
        self.useful[q] = self.nfa.is_final(q);
        self.scc_stack.push(q);
        self.call_stack.push(Frame {
            state: q,
            post: 0,
            target: 0,
        });
        self.stats.state_visits += 1;
    }

    fn next_edge(&mut self) -> Option<State> {
        let frame = self.call_stack.last_mut()?;
        let posts = self.nfa.state_post(frame.state).as_slice();
        while frame.post < posts.len() {
            let targets = &posts[frame.post].targets;
            if frame.target < targets.len() {
                frame.target += 1;
                return Some(targets[frame.target - 1]);
            }
            frame.post += 1;
            frame.target = 0;
        }
        None
    }

    fn run_from(&mut self, root: State) {
        self.enter(root);
        while let Some(q) = self.call_stack.last().map(|f| f.state) {
            if let Some(t) = self.next_edge() {
                self.stats.edge_visits += 1;
                if self.index[t] == UNVISITED {
                    self.enter(t);
                } else {
                    if self.on_stack[t] {
                        self.lowlink[q] = self.lowlink[q].min(self.index[t]);
                    }
                    if self.useful[t] {
                        self.useful[q] = true;
                    }
                }
                continue;
            }

            self.call_stack.pop();
            if self.lowlink[q] == self.index[q] {
                let start = self.scc_stack.iter().rposition(|&s| s == q).expect("root is on the stack");
                let any_useful = self.scc_stack[start..].iter().any(|&s| self.useful[s]);
                for &s in &self.scc_stack[start..] {
                    self.on_stack[s] = false;
                    self.useful[s] |= any_useful;
                }
                self.scc_stack.truncate(start);
            }
            if let Some(p) = self.call_stack.last().map(|f| f.state) {
                self.lowlink[p] = self.lowlink[p].min(self.lowlink[q]);
                if self.useful[q] {
                    self.useful[p] = true;
                }
            }
        }
    }
}

/// Marks useful states with one iterative depth-first pass.
///
/// This is Tarjan's SCC search from the initial states. A state is useful
/// when it is final, when it has an edge to a state already known useful,
/// or when a DFS child finishes useful; a completed SCC containing a useful
/// state becomes useful as a whole. No backward search is needed.
pub fn useful_mask(nfa: &Nfa) -> (Vec<bool>, DfsStats) {
    let n = nfa.num_states();
    let mut search = Search {
        nfa,
        index: vec![UNVISITED; n],
        lowlink: vec![0; n],
        on_stack: vec![false; n],
        useful: vec![false; n],
        scc_stack: Vec::new(),
        call_stack: Vec::new(),
        next_index: 0,
        stats: DfsStats::default(),
    };
    for root in nfa.initial_sorted() {
        if search.index[root] == UNVISITED {
            search.run_from(root);
        }
    }
    (search.useful, search.stats)
}

/// States lying on some accepting run.
pub fn useful_states(nfa: &Nfa) -> OrdVector<State> {
    let (mask, _) = useful_mask(nfa);
    OrdVector::from_sorted_unchecked((0..mask.len()).filter(|&q| mask[q]).collect())
}

/// Removes useless states in a single pass over the transition relation,
/// renaming survivors densely while preserving their relative order.
pub fn trim_inplace(nfa: &mut Nfa) -> Renaming {
    let (useful, _) = useful_mask(nfa);
    let mut map = vec![None; useful.len()];
    let mut len = 0;
    for (q, &u) in useful.iter().enumerate() {
        if u {
            map[q] = Some(len);
            len += 1;
        }
    }
    let renaming = Renaming { map, len };

    let posts = nfa.delta.posts_mut();
    for q in 0..posts.len() {
        let Some(nq) = renaming.map[q] else { continue };
        let mut sp = std::mem::take(&mut posts[q]);
        sp.retain_and_rename(|t| useful[t], |t| renaming.map[t].unwrap());
        posts[nq] = sp;
    }
    posts.truncate(len);

    let rename_set = |set: &SparseSet| -> SparseSet { set.iter().filter_map(|q| renaming.get(q)).collect() };
    let initial = rename_set(nfa.initial());
    let final_states = rename_set(nfa.final_states());
    nfa.replace_initial_final(initial, final_states);
    renaming
}

pub fn trim(nfa: &Nfa) -> (Nfa, Renaming) {
    let mut out = nfa.clone();
    let renaming = trim_inplace(&mut out);
    (out, renaming)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_is_all_useful() {
        let nfa = Nfa::from_word(&[0, 1, 2]);
        assert_eq!(useful_states(&nfa).as_slice(), &[0, 1, 2, 3]);
        let (t, r) = trim(&nfa);
        assert!(r.is_identity());
        assert_eq!(t, nfa);
    }

    #[test]
    fn dead_branch_removed() {
        // 0 -a-> 1 (final), 0 -b-> 2 -a-> 3 (dead end)
        let nfa = Nfa::from_parts(4, [(0, 0, 1), (0, 1, 2), (2, 0, 3)], [0], [1]);
        assert_eq!(useful_states(&nfa).as_slice(), &[0, 1]);
        let (t, r) = trim(&nfa);
        assert_eq!(t.num_states(), 2);
        assert_eq!(t.num_transitions(), 1);
        assert_eq!(r.get(2), None);
    }

    #[test]
    fn cycle_reaching_final_through_finished_scc() {
        // 0 <-> 1 cycle, 1 -> 2 -> 3 final; 0 -> 4 sink loop
        let nfa = Nfa::from_parts(
            5,
            [(0, 0, 1), (1, 0, 0), (1, 1, 2), (2, 0, 3), (0, 1, 4), (4, 0, 4)],
            [0],
            [3],
        );
        assert_eq!(useful_states(&nfa).as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn renaming_preserves_order() {
        let nfa = Nfa::from_parts(5, [(4, 0, 2), (2, 0, 0), (4, 1, 1)], [4], [0]);
        let (t, r) = trim(&nfa);
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![(0, 0), (2, 1), (4, 2)]);
        assert!(t.has_transition(2, 0, 1) && t.has_transition(1, 0, 0));
        assert!(t.is_initial(2) && t.is_final(0));
    }

    #[test]
    fn trim_is_idempotent() {
        let nfa = Nfa::from_parts(4, [(0, 0, 1), (1, 0, 2), (3, 0, 1)], [0, 3], [1]);
        let (once, _) = trim(&nfa);
        let (twice, r) = trim(&once);
        assert!(r.is_identity());
        assert_eq!(once, twice);
    }
}
