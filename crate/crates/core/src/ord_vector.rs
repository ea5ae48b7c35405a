//! A set of ordered elements stored in a sorted, duplicate-free `Vec`.
//!
//! Appending or removing the largest element is constant time, unions and
//! intersections are linear merges and lookup is a binary search. Inserting
//! or erasing anywhere else shifts the tail, so bulk constructions should
//! produce elements in ascending order and use [`OrdVector::push_back`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdVector<T> {
    elems: Vec<T>,
}

impl<T> Default for OrdVector<T> {
    fn default() -> Self {
        Self { elems: Vec::new() }
    }
}

impl<T: fmt::Debug> fmt::Debug for OrdVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl<T> Deref for OrdVector<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.elems
    }
}

impl<T> OrdVector<T> {
    pub const fn new() -> Self {
        Self { elems: Vec::new() }
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            elems: Vec::with_capacity(capacity),
        }
    }

    pub fn as_slice(&self) -> &[T] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elems
    }

    pub fn clear(&mut self) {
        self.elems.clear();
    }

    pub fn pop_back(&mut self) -> Option<T> {
        self.elems.pop()
    }

    /// Keeps only the elements for which `keep` returns true.
    pub fn retain(&mut self, keep: impl FnMut(&T) -> bool) {
        self.elems.retain(keep);
    }

    /// Applies `f` to every element in place.
    ///
    /// `f` must be strictly monotone on the stored elements, otherwise the
    /// ordering invariant breaks (checked in debug builds).
    pub fn map_monotone(&mut self, f: impl FnMut(&mut T))
    where
        T: Ord,
    {
        self.elems.iter_mut().for_each(f);
        debug_assert!(self.elems.windows(2).all(|w| w[0] < w[1]));
    }
}

impl<T: Ord> OrdVector<T> {
    /// Builds a set from arbitrary elements (sorts and deduplicates).
    pub fn from_vec(mut elems: Vec<T>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        Self { elems }
    }

    /// Wraps a vector that is already strictly ascending.
    ///
    /// # Panics
    /// In debug builds, if `elems` is not strictly ascending.
    pub fn from_sorted_unchecked(elems: Vec<T>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Self { elems }
    }

    pub fn singleton(elem: T) -> Self {
        Self { elems: vec![elem] }
    }

    /// Appends an element larger than every stored one.
    ///
    /// # Panics
    /// If `elem` is not strictly greater than the current maximum.
    pub fn push_back(&mut self, elem: T) {
        if let Some(last) = self.elems.last() {
            assert!(*last < elem, "push_back would break the ordering");
        }
        self.elems.push(elem);
    }

    /// Inserts an element, returning false when it was already present.
    /// Falls back to `push_back` when `elem` is the new maximum.
    pub fn insert(&mut self, elem: T) -> bool {
        match self.elems.last() {
            None => {
                self.elems.push(elem);
                true
            }
            Some(last) if *last < elem => {
                self.elems.push(elem);
                true
            }
            _ => match self.elems.binary_search(&elem) {
                Ok(_) => false,
                Err(pos) => {
                    self.elems.insert(pos, elem);
                    true
                }
            },
        }
    }

    pub fn remove(&mut self, elem: &T) -> bool {
        match self.elems.binary_search(elem) {
            Ok(pos) => {
                self.elems.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn contains(&self, elem: &T) -> bool {
        self.elems.binary_search(elem).is_ok()
    }

    pub fn max(&self) -> Option<&T> {
        self.elems.last()
    }

    /// Merge-based subset test.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut rest = other.elems.iter();
        'outer: for x in &self.elems {
            for y in rest.by_ref() {
                match y.cmp(x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// True if the two sets share at least one element.
    pub fn intersects(&self, other: &Self) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }
}

impl<T: Ord + Clone> OrdVector<T> {
    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                Ordering::Less => {
                    out.push(self.elems[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.elems[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(self.elems[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.elems[i..]);
        out.extend_from_slice(&other.elems[j..]);
        Self { elems: out }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(self.elems[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { elems: out }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len());
        let mut j = 0;
        for x in &self.elems {
            while j < other.len() && other.elems[j] < *x {
                j += 1;
            }
            if j == other.len() || other.elems[j] != *x {
                out.push(x.clone());
            }
        }
        Self { elems: out }
    }

    /// In-place union with `other`.
    pub fn extend_union(&mut self, other: &Self) {
        if other.is_empty() {
            return;
        }
        match (self.elems.last(), other.elems.first()) {
            (None, _) => self.elems.extend_from_slice(&other.elems),
            (Some(last), Some(first)) if last < first => self.elems.extend_from_slice(&other.elems),
            _ => *self = self.union(other),
        }
    }
}

impl<T: Ord> FromIterator<T> for OrdVector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self::from_vec(iter.into_iter().collect())
    }
}

impl<T> IntoIterator for OrdVector<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a OrdVector<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}
