//! Boolean formulas over atomic propositions `a0, a1, …`.
//!
//! Grammar, loosest to tightest binding:
//!
//! ```text
//! or   := and ('|' and)*
//! and  := not ('&' not)*
//! not  := '!' not | atom
//! atom := '(' or ')' | 'a' DIGITS | 'true' | 'false'
//! ```

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymbolFormula {
    True,
    False,
    Atom(u32),
    Not(Box<SymbolFormula>),
    And(Box<SymbolFormula>, Box<SymbolFormula>),
    Or(Box<SymbolFormula>, Box<SymbolFormula>),
}

/// A formula parse failure at a 0-based byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaError {
    pub offset: usize,
    pub message: String,
}

impl SymbolFormula {
    pub fn parse(text: &str) -> Result<Self, FormulaError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let f = p.or()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }

    pub fn atoms(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<u32>) {
        match self {
            Self::True | Self::False => {}
            Self::Atom(i) => {
                out.insert(*i);
            }
            Self::Not(f) => f.collect_atoms(out),
            Self::And(l, r) | Self::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Evaluates under `value(atom)`.
    pub fn eval(&self, value: &impl Fn(u32) -> bool) -> bool {
        match self {
            Self::True => true,
            Self::False => false,
            Self::Atom(i) => value(*i),
            Self::Not(f) => !f.eval(value),
            Self::And(l, r) => l.eval(value) && r.eval(value),
            Self::Or(l, r) => l.eval(value) || r.eval(value),
        }
    }

    pub fn not(f: SymbolFormula) -> Self {
        Self::Not(Box::new(f))
    }

    pub fn and(l: SymbolFormula, r: SymbolFormula) -> Self {
        Self::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: SymbolFormula, r: SymbolFormula) -> Self {
        Self::Or(Box::new(l), Box::new(r))
    }

    fn precedence(&self) -> u8 {
        match self {
            Self::Or(..) => 0,
            Self::And(..) => 1,
            _ => 2,
        }
    }

    fn fmt_child(&self, child: &SymbolFormula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if child.precedence() < self.precedence() {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for SymbolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::True => f.write_str("true"),
            Self::False => f.write_str("false"),
            Self::Atom(i) => write!(f, "a{i}"),
            Self::Not(inner) => {
                f.write_str("!")?;
                if inner.precedence() < 2 {
                    write!(f, "({inner})")
                } else {
                    write!(f, "{inner}")
                }
            }
            Self::And(l, r) => {
                self.fmt_child(l, f)?;
                f.write_str(" & ")?;
                // right operand of a left-assoc chain gets parens at equal level
                if r.precedence() <= self.precedence() {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Self::Or(l, r) => {
                self.fmt_child(l, f)?;
                f.write_str(" | ")?;
                if r.precedence() <= self.precedence() {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> FormulaError {
        FormulaError {
            offset: self.pos,
            message: message.to_owned(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn or(&mut self) -> Result<SymbolFormula, FormulaError> {
        let mut f = self.and()?;
        while self.peek() == Some(b'|') {
            self.pos += 1;
            f = SymbolFormula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<SymbolFormula, FormulaError> {
        let mut f = self.not()?;
        while self.peek() == Some(b'&') {
            self.pos += 1;
            f = SymbolFormula::and(f, self.not()?);
        }
        Ok(f)
    }

    fn not(&mut self) -> Result<SymbolFormula, FormulaError> {
        if self.peek() == Some(b'!') {
            self.pos += 1;
            return Ok(SymbolFormula::not(self.not()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<SymbolFormula, FormulaError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.or()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let word = &self.src[start..self.pos];
                match word {
                    b"true" => Ok(SymbolFormula::True),
                    b"false" => Ok(SymbolFormula::False),
                    [b'a', digits @ ..] if !digits.is_empty() && digits.iter().all(u8::is_ascii_digit) => {
                        let n = std::str::from_utf8(digits)
                            .ok()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| FormulaError {
                                offset: start,
                                message: "atom index out of range".into(),
                            })?;
                        Ok(SymbolFormula::Atom(n))
                    }
                    _ => Err(FormulaError {
                        offset: start,
                        message: format!("unknown atom '{}'", String::from_utf8_lossy(word)),
                    }),
                }
            }
            Some(_) => Err(self.error("expected an atom, '!' or '('")),
            None => Err(self.error("unexpected end of formula")),
        }
    }
}
