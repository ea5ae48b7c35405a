//! Sparse set of small unsigned integers with constant-time insert, remove
//! and membership. Used for the initial and final states of an automaton.

#[derive(Clone, Default)]
pub struct SparseSet {
    dense: Vec<usize>,
    sparse: Vec<usize>,
    size: usize,
}

impl SparseSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// A set whose domain is `0..domain` without further reallocation.
    pub fn with_domain(domain: usize) -> Self {
        Self {
            dense: Vec::with_capacity(domain),
            sparse: vec![0; domain],
            size: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        match self.sparse.get(x) {
            Some(&i) => i < self.size && self.dense[i] == x,
            None => false,
        }
    }

    pub fn insert(&mut self, x: usize) -> bool {
        if self.contains(x) {
            return false;
        }
        if x >= self.sparse.len() {
            self.sparse.resize(x + 1, 0);
        }
        if self.size < self.dense.len() {
            self.dense[self.size] = x;
        } else {
            self.dense.push(x);
        }
        self.sparse[x] = self.size;
        self.size += 1;
        true
    }

    pub fn remove(&mut self, x: usize) -> bool {
        if !self.contains(x) {
            return false;
        }
        let pos = self.sparse[x];
        let last = self.dense[self.size - 1];
        self.dense[pos] = last;
        self.sparse[last] = pos;
        self.size -= 1;
        true
    }

    pub fn clear(&mut self) {
        self.size = 0;
    }

    /// Members in insertion order (modulo removals).
    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.dense[..self.size].iter().copied()
    }

    /// Members in ascending order.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.iter().collect();
        v.sort_unstable();
        v
    }

    pub fn max(&self) -> Option<usize> {
        self.iter().max()
    }
}

impl std::fmt::Debug for SparseSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.sorted()).finish()
    }
}

impl PartialEq for SparseSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.iter().all(|x| other.contains(x))
    }
}

impl Eq for SparseSet {}

impl FromIterator<usize> for SparseSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = SparseSet::new();
        for x in iter {
            set.insert(x);
        }
        set
    }
}

impl Extend<usize> for SparseSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for x in iter {
            self.insert(x);
        }
    }
}
