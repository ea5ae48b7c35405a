use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::nfa::Symbol;
use crate::ord_vector::OrdVector;

/// Bijection between symbol names and [`Symbol`] values.
///
/// Names are interned on first use; fresh symbols are allocated from a
/// counter that skips values already claimed by explicit insertions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    by_name: HashMap<String, Symbol>,
    by_symbol: BTreeMap<Symbol, String>,
    next_symbol: Symbol,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_symbol_map<S: Into<String>>(map: impl IntoIterator<Item = (S, Symbol)>) -> Result<Self> {
        let mut alphabet = Self::new();
        for (name, symbol) in map {
            alphabet.insert(name, symbol)?;
        }
        Ok(alphabet)
    }

    /// Returns the symbol for `name`, allocating a fresh one if needed.
    pub fn intern(&mut self, name: &str) -> Symbol {
        if let Some(&s) = self.by_name.get(name) {
            return s;
        }
        while self.by_symbol.contains_key(&self.next_symbol) {
            self.next_symbol += 1;
        }
        let s = self.next_symbol;
        self.next_symbol += 1;
        self.by_name.insert(name.to_owned(), s);
        self.by_symbol.insert(s, name.to_owned());
        s
    }

    /// Binds `name` to `symbol`. Rebinding an existing pair is a no-op;
    /// anything that would break bijectivity is an error.
    pub fn insert(&mut self, name: impl Into<String>, symbol: Symbol) -> Result<()> {
        let name = name.into();
        match (self.by_name.get(&name), self.by_symbol.get(&symbol)) {
            (Some(&s), _) if s == symbol => Ok(()),
            (None, None) => {
                self.by_symbol.insert(symbol, name.clone());
                self.by_name.insert(name, symbol);
                Ok(())
            }
            _ => Err(Error::AlphabetConflict { name, symbol }),
        }
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.by_name.get(name).copied()
    }

    pub fn name(&self, symbol: Symbol) -> Option<&str> {
        self.by_symbol.get(&symbol).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.by_name.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_name.is_empty()
    }

    pub fn symbols(&self) -> OrdVector<Symbol> {
        OrdVector::from_sorted_unchecked(self.by_symbol.keys().copied().collect())
    }

    /// (symbol, name) pairs in ascending symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, &str)> {
        self.by_symbol.iter().map(|(&s, n)| (s, n.as_str()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let mut a = Alphabet::new();
        let x = a.intern("a48");
        let y = a.intern("a52");
        assert_ne!(x, y);
        assert_eq!(a.intern("a48"), x);
        assert_eq!(a.name(y), Some("a52"));
        assert_eq!(a.symbol("a52"), Some(y));
    }

    #[test]
    fn explicit_symbols_are_skipped() {
        let mut a = Alphabet::from_symbol_map([("a", 97u32), ("b", 0)]).unwrap();
        let c = a.intern("c");
        assert_eq!(c, 1);
        assert!(a.insert("d", 97).is_err());
        assert!(a.insert("a", 5).is_err());
        assert!(a.insert("a", 97).is_ok());
        assert_eq!(a.symbols().as_slice(), &[0, 1, 97]);
    }
}
