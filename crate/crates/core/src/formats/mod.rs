//! Text formats: `.mata` input and output, symbol formulas with
//! mintermization, and DOT export.

pub mod dot;
pub mod formula;
pub mod mata;
pub mod minterm;

pub use dot::to_dot;
pub use formula::{FormulaError, SymbolFormula};
pub use mata::{
    minterm_alphabet, parse_mata, serialize_mata, symbol_token, to_nfa_bits, to_nfa_bits_many, to_nfa_explicit,
    AutomatonKind, Label, MataAutomaton, MataDocument, RawTransition, EPSILON_TOKEN,
};
pub use minterm::{mintermize, Minterm, Mintermization, TruthTable, MAX_ATOMS};
