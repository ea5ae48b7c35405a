use std::fmt;

/// A set of bytes, one bit per value.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ByteSet([u64; 4]);

impl ByteSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn full() -> Self {
        Self([u64::MAX; 4])
    }

    pub fn insert(&mut self, b: u8) {
        self.0[(b >> 6) as usize] |= 1 << (b & 63);
    }

    pub fn insert_range(&mut self, lo: u8, hi: u8) {
        for b in lo..=hi {
            self.insert(b);
        }
    }

    pub fn union_with(&mut self, other: &ByteSet) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a |= b;
        }
    }

    pub fn contains(&self, b: u8) -> bool {
        (self.0[(b >> 6) as usize] >> (b & 63)) & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self(self.0.map(|w| !w))
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..=255u8).filter(|&b| self.contains(b))
    }
}

impl fmt::Debug for ByteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|b| b as char)).finish()
    }
}

impl FromIterator<u8> for ByteSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut s = Self::new();
        for b in iter {
            s.insert(b);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegexAst {
    /// Matches only the empty word.
    Empty,
    Literal(u8),
    /// `set` holds the bytes as written; `negated` flips the match.
    CharClass { set: ByteSet, negated: bool },
    Concat(Vec<RegexAst>),
    Alternation(Vec<RegexAst>),
    Star(Box<RegexAst>),
    Plus(Box<RegexAst>),
    Optional(Box<RegexAst>),
    Repeat { inner: Box<RegexAst>, min: u32, max: Option<u32> },
}

impl RegexAst {
    /// Bytes a class matches once negation is resolved.
    pub fn class_bytes(set: &ByteSet, negated: bool) -> ByteSet {
        if negated {
            set.complement()
        } else {
            *set
        }
    }
}
