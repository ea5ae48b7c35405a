//! Finite automata over an explicit alphabet.
//!
//! The transition relation is stored in three layers ([`Delta`] →
//! [`StatePost`] → [`SymbolPost`]) on top of sorted vectors
//! ([`OrdVector`]). On that representation the crate provides the boolean
//! operations, determinization, trimming, antichain-based inclusion,
//! simulation reduction, the `.mata` text format and a regex frontend.
//!
//! ```
//! use automata::{from_regex, concatenate, trim, is_included};
//!
//! let a = from_regex("aab*").unwrap();
//! let b = from_regex("((a+b)*a)*").unwrap();
//! let (ab, _) = trim(&concatenate(&a, &b));
//! assert!(is_included(&from_regex("aaa").unwrap(), &ab).unwrap().0);
//! ```

pub mod algorithms;
pub mod alphabet;
pub mod delta;
pub mod error;
pub mod formats;
pub mod inclusion;
pub mod nfa;
pub mod ord_vector;
pub mod regex;
pub mod simulation;
pub mod sparse_set;

pub use algorithms::*;
pub use alphabet::Alphabet;
pub use delta::{Delta, StatePost, SymbolPost, SyncIterator, SyncMode};
pub use error::{Error, Result};
pub use formats::{parse_mata, serialize_mata, to_dot, to_nfa_bits, to_nfa_explicit, SymbolFormula};
pub use inclusion::{
    is_included, is_included_naive, is_included_with, is_universal, is_universal_with, InclusionResult, InclusionStats,
    WorklistPolicy,
};
pub use nfa::{Nfa, State, Symbol, Transition, Word, EPSILON};
pub use ord_vector::OrdVector;
pub use regex::{compile_regex, from_regex, parse_regex, RegexAst};
pub use simulation::{compute_simulation, reduce_simulation, SimulationRelation};
pub use sparse_set::SparseSet;
