use crate::algorithms::{remove_epsilon, trim};
use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::nfa::{Nfa, State, Symbol, EPSILON};

use super::ast::RegexAst;
use super::parser::parse_regex;

/// Thompson construction: every fragment has one entry and one exit state,
/// glued with [`EPSILON`] moves.
struct Builder {
    nfa: Nfa,
}

impl Builder {
    fn fresh(&mut self) -> State {
        self.nfa.add_state()
    }

    fn eps(&mut self, from: State, to: State) {
        self.nfa.add_transition(from, EPSILON, to);
    }

    fn build(&mut self, ast: &RegexAst) -> (State, State) {
        match ast {
            RegexAst::Empty => {
                let s = self.fresh();
                (s, s)
            }
            RegexAst::Literal(b) => {
                let (s, e) = (self.fresh(), self.fresh());
                self.nfa.add_transition(s, *b as Symbol, e);
                (s, e)
            }
            RegexAst::CharClass { set, negated } => {
                let (s, e) = (self.fresh(), self.fresh());
                for b in RegexAst::class_bytes(set, *negated).iter() {
                    self.nfa.add_transition(s, b as Symbol, e);
                }
                (s, e)
            }
            RegexAst::Concat(items) => {
                let mut items = items.iter();
                let Some(first) = items.next() else {
                    return self.build(&RegexAst::Empty);
                };
                let (s, mut e) = self.build(first);
                for item in items {
                    let (s2, e2) = self.build(item);
                    self.eps(e, s2);
                    e = e2;
                }
                (s, e)
            }
            RegexAst::Alternation(branches) => {
                let (s, e) = (self.fresh(), self.fresh());
                for b in branches {
                    let (bs, be) = self.build(b);
                    self.eps(s, bs);
                    self.eps(be, e);
                }
                (s, e)
            }
            RegexAst::Star(inner) => {
                let (s, e) = (self.fresh(), self.fresh());
                let (is, ie) = self.build(inner);
                self.eps(s, is);
                self.eps(ie, is);
                self.eps(ie, e);
                self.eps(s, e);
                (s, e)
            }
            RegexAst::Plus(inner) => {
                let (is, ie) = self.build(inner);
                let e = self.fresh();
                self.eps(ie, is);
                self.eps(ie, e);
                (is, e)
            }
            RegexAst::Optional(inner) => {
                let (s, e) = (self.fresh(), self.fresh());
                let (is, ie) = self.build(inner);
                self.eps(s, is);
                self.eps(ie, e);
                self.eps(s, e);
                (s, e)
            }
            RegexAst::Repeat { inner, min, max } => {
                let mut parts: Vec<RegexAst> = vec![(**inner).clone(); *min as usize];
                match max {
                    None => parts.push(RegexAst::Star(inner.clone())),
                    Some(max) => {
                        // (x(x(x)?)?)? keeps the optional tail linear in size
                        let mut tail: Option<RegexAst> = None;
                        for _ in *min..*max {
                            let body = match tail {
                                None => (**inner).clone(),
                                Some(t) => RegexAst::Concat(vec![(**inner).clone(), t]),
                            };
                            tail = Some(RegexAst::Optional(Box::new(body)));
                        }
                        parts.extend(tail);
                    }
                }
                self.build(&RegexAst::Concat(parts))
            }
        }
    }
}

/// Compiles an AST to an epsilon-free, trimmed NFA over byte symbols
/// `0..=255` recognising exactly the words the pattern describes.
pub fn compile_regex(ast: &RegexAst) -> Nfa {
    let mut b = Builder { nfa: Nfa::new() };
    let (s, e) = b.build(ast);
    b.nfa.add_initial(s);
    b.nfa.add_final(e);
    let (mut nfa, _) = trim(&remove_epsilon(&b.nfa));
    nfa.alphabet = Some(byte_alphabet());
    nfa
}

pub fn from_regex(pattern: &str) -> Result<Nfa> {
    Ok(compile_regex(&parse_regex(pattern)?))
}

/// Token used for a byte symbol in text formats: the character itself when
/// it is a printable ASCII glyph, `\xHH` otherwise.
pub fn byte_name(b: u8) -> String {
    if b.is_ascii_graphic() && !matches!(b, b'#' | b'\\' | b'%' | b'@' | b'"') {
        (b as char).to_string()
    } else {
        format!("\\x{b:02x}")
    }
}

/// All 256 byte symbols under their [`byte_name`]s.
pub fn byte_alphabet() -> Alphabet {
    Alphabet::from_symbol_map((0..=255u8).map(|b| (byte_name(b), b as Symbol))).expect("byte names are distinct")
}
