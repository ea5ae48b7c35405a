//! A regular-expression subset compiled to byte-level automata.

mod ast;
mod compile;
mod parser;

pub use ast::{ByteSet, RegexAst};
pub use compile::{byte_alphabet, byte_name, compile_regex, from_regex};
pub use parser::{parse_regex, MAX_REPEAT};
