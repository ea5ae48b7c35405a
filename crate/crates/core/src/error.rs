use thiserror::Error;

use crate::nfa::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("epsilon not supported; remove first")]
    EpsilonNotSupported,

    #[error("symbol {symbol} is outside the given alphabet")]
    SymbolOutsideAlphabet { symbol: Symbol },

    #[error("name {name:?} and symbol {symbol} conflict with an existing alphabet binding")]
    AlphabetConflict { name: String, symbol: Symbol },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}, column {column}: {message}")]
    Formula {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{count} atomic propositions exceed the mintermization bound of {max}; encode the alphabet explicitly")]
    TooManyAtoms { count: usize, max: usize },

    #[error("regex error at position {position}: {message}")]
    Regex { position: usize, message: String },

    #[error("expected a {expected} automaton, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
}
