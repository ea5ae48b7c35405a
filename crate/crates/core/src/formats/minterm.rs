//! Mintermization: splitting a set of symbol formulas into pairwise disjoint,
//! satisfiable Boolean combinations, evaluated on explicit truth tables.

use crate::error::{Error, Result};
use crate::nfa::Symbol;
use crate::ord_vector::OrdVector;

use super::formula::SymbolFormula;

/// Largest number of distinct atoms a truth table may range over.
pub const MAX_ATOMS: usize = 24;

/// Set of assignments to `k` atoms, one bit per assignment. Bit `v` stands
/// for the assignment giving atom `i` the value of bit `i` of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    words: Vec<u64>,
    num_atoms: usize,
}

const ATOM_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

impl TruthTable {
    fn num_words(num_atoms: usize) -> usize {
        (1usize << num_atoms).div_ceil(64)
    }

    fn tail_mask(&self) -> u64 {
        let bits = 1usize << self.num_atoms;
        if bits >= 64 {
            u64::MAX
        } else {
            (1u64 << bits) - 1
        }
    }

    pub fn constant(num_atoms: usize, value: bool) -> Self {
        let mut t = Self {
            words: vec![if value { u64::MAX } else { 0 }; Self::num_words(num_atoms)],
            num_atoms,
        };
        t.mask_tail();
        t
    }

    fn mask_tail(&mut self) {
        let m = self.tail_mask();
        if let Some(w) = self.words.last_mut() {
            *w &= m;
        }
    }

    /// Assignments where atom number `index` (position among the atoms) is true.
    pub fn atom(num_atoms: usize, index: usize) -> Self {
        let n = Self::num_words(num_atoms);
        let words = if index < 6 {
            vec![ATOM_PATTERNS[index]; n]
        } else {
            (0..n).map(|w| if (w >> (index - 6)) & 1 == 1 { u64::MAX } else { 0 }).collect()
        };
        let mut t = Self { words, num_atoms };
        t.mask_tail();
        t
    }

    pub fn and(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            num_atoms: self.num_atoms,
        }
    }

    pub fn or(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
            num_atoms: self.num_atoms,
        }
    }

    pub fn not(&self) -> Self {
        let mut t = Self {
            words: self.words.iter().map(|w| !w).collect(),
            num_atoms: self.num_atoms,
        };
        t.mask_tail();
        t
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, assignment: usize) -> bool {
        self.words.get(assignment / 64).is_some_and(|w| (w >> (assignment % 64)) & 1 == 1)
    }

    /// Satisfying assignments in ascending order.
    pub fn assignments(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Truth table of `formula`, where `atoms` lists the atom numbers in
    /// table order.
    pub fn of_formula(formula: &SymbolFormula, atoms: &[u32]) -> Self {
        let k = atoms.len();
        match formula {
            SymbolFormula::True => Self::constant(k, true),
            SymbolFormula::False => Self::constant(k, false),
            SymbolFormula::Atom(a) => {
                let i = atoms.binary_search(a).expect("atom not in table");
                Self::atom(k, i)
            }
            SymbolFormula::Not(f) => Self::of_formula(f, atoms).not(),
            SymbolFormula::And(l, r) => Self::of_formula(l, atoms).and(&Self::of_formula(r, atoms)),
            SymbolFormula::Or(l, r) => Self::of_formula(l, atoms).or(&Self::of_formula(r, atoms)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minterm {
    pub id: Symbol,
    /// Polarity of each input formula in this minterm's conjunction.
    pub signature: Vec<bool>,
    pub valuations: TruthTable,
}

impl Minterm {
    /// The conjunction of input formulas (or their negations) defining this minterm.
    pub fn as_formula(&self, formulas: &[SymbolFormula]) -> SymbolFormula {
        self.signature
            .iter()
            .zip(formulas)
            .map(|(&pos, f)| if pos { f.clone() } else { SymbolFormula::not(f.clone()) })
            .reduce(SymbolFormula::and)
            .unwrap_or(SymbolFormula::True)
    }
}

#[derive(Clone, Debug)]
pub struct Mintermization {
    /// Atom numbers in truth-table order.
    pub atoms: Vec<u32>,
    pub formulas: Vec<SymbolFormula>,
    pub minterms: Vec<Minterm>,
    /// For each input formula, the minterms implying it.
    pub formula_minterms: Vec<OrdVector<Symbol>>,
}

impl Mintermization {
    pub fn minterms_of(&self, formula: &SymbolFormula) -> Option<&OrdVector<Symbol>> {
        self.formulas
            .iter()
            .position(|f| f == formula)
            .map(|i| &self.formula_minterms[i])
    }

    /// Index of the truth-table assignment given by a per-atom valuation.
    pub fn assignment_index(&self, value: impl Fn(u32) -> bool) -> usize {
        self.atoms
            .iter()
            .enumerate()
            .filter(|&(_, &a)| value(a))
            .map(|(i, _)| 1usize << i)
            .sum()
    }

    /// The unique minterm containing an assignment, if any.
    pub fn minterm_of_assignment(&self, assignment: usize) -> Option<Symbol> {
        self.minterms
            .iter()
            .find(|m| m.valuations.contains(assignment))
            .map(|m| m.id)
    }
}

/// Refines `{true}` by every formula `f` into the parts `∧ f` and `∧ ¬f`,
/// discarding empty parts.
pub fn mintermize(formulas: &[SymbolFormula]) -> Result<Mintermization> {
    let atoms: Vec<u32> = formulas
        .iter()
        .flat_map(SymbolFormula::atoms)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    if atoms.len() > MAX_ATOMS {
        return Err(Error::TooManyAtoms {
            count: atoms.len(),
            max: MAX_ATOMS,
        });
    }
    let k = atoms.len();
    let mut parts: Vec<(TruthTable, Vec<bool>)> = vec![(TruthTable::constant(k, true), Vec::new())];
    for f in formulas {
        let table = TruthTable::of_formula(f, &atoms);
        let negated = table.not();
        let mut next = Vec::with_capacity(parts.len() * 2);
        for (part, sig) in parts {
            let pos = part.and(&table);
            let neg = part.and(&negated);
            if !pos.is_empty() {
                let mut s = sig.clone();
                s.push(true);
                next.push((pos, s));
            }
            if !neg.is_empty() {
                let mut s = sig;
                s.push(false);
                next.push((neg, s));
            }
        }
        parts = next;
    }

    let minterms: Vec<Minterm> = parts
        .into_iter()
        .enumerate()
        .map(|(i, (valuations, signature))| Minterm {
            id: i as Symbol,
            signature,
            valuations,
        })
        .collect();
    let formula_minterms = (0..formulas.len())
        .map(|j| {
            minterms
                .iter()
                .filter(|m| m.signature[j])
                .map(|m| m.id)
                .collect::<Vec<_>>()
        })
        .map(OrdVector::from_sorted_unchecked)
        .collect();
    Ok(Mintermization {
        atoms,
        formulas: formulas.to_vec(),
        minterms,
        formula_minterms,
    })
}
