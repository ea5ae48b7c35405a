use crate::error::{Error, Result};

use super::ast::{ByteSet, RegexAst};

/// Largest count allowed in `{m}`, `{m,}` and `{m,n}`.
pub const MAX_REPEAT: u32 = 64;

/// Parses the supported regex subset. Patterns describe whole words; there
/// are no anchors.
pub fn parse_regex(pattern: &str) -> Result<RegexAst> {
    let mut p = Parser { src: pattern.as_bytes(), pos: 0 };
    let ast = p.alternation()?;
    match p.peek() {
        None => Ok(ast),
        Some(b')') => Err(p.error("unmatched ')'")),
        Some(_) => Err(p.error("unexpected character")),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn digit_class() -> ByteSet {
    (b'0'..=b'9').collect()
}

fn word_class() -> ByteSet {
    let mut s: ByteSet = (b'a'..=b'z').chain(b'A'..=b'Z').chain(b'0'..=b'9').collect();
    s.insert(b'_');
    s
}

fn space_class() -> ByteSet {
    [b' ', b'\t', b'\n', b'\r', 0x0b, 0x0c].into_iter().collect()
}

fn dot_class() -> RegexAst {
    RegexAst::CharClass {
        set: [b'\n'].into_iter().collect(),
        negated: true,
    }
}

enum Escape {
    Byte(u8),
    Class(ByteSet),
}

impl Parser<'_> {
    fn error_at(&self, position: usize, message: &str) -> Error {
        Error::Regex {
            position,
            message: message.to_owned(),
        }
    }

    fn error(&self, message: &str) -> Error {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn alternation(&mut self) -> Result<RegexAst> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 {
            branches.pop().unwrap()
        } else {
            RegexAst::Alternation(branches)
        })
    }

    fn concat(&mut self) -> Result<RegexAst> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == b'|' || c == b')' {
                break;
            }
            items.push(self.repeat()?);
        }
        Ok(match items.len() {
            0 => RegexAst::Empty,
            1 => items.pop().unwrap(),
            _ => RegexAst::Concat(items),
        })
    }

    fn repeat(&mut self) -> Result<RegexAst> {
        let mut ast = self.atom()?;
        loop {
            ast = match self.peek() {
                Some(b'*') => RegexAst::Star(Box::new(ast)),
                Some(b'+') => RegexAst::Plus(Box::new(ast)),
                Some(b'?') => RegexAst::Optional(Box::new(ast)),
                Some(b'{') => {
                    let (min, max) = self.counts()?;
                    ast = RegexAst::Repeat {
                        inner: Box::new(ast),
                        min,
                        max,
                    };
                    continue;
                }
                _ => return Ok(ast),
            };
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<Option<u32>> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let n: u64 = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap_or(u64::MAX);
        if n > MAX_REPEAT as u64 {
            return Err(self.error_at(start, &format!("repetition count exceeds {MAX_REPEAT}")));
        }
        Ok(Some(n as u32))
    }

    /// Parses `{m}`, `{m,}` or `{m,n}` starting at the brace.
    fn counts(&mut self) -> Result<(u32, Option<u32>)> {
        let open = self.pos;
        self.pos += 1;
        let min = self.number()?.ok_or_else(|| self.error_at(open, "expected a repetition count"))?;
        let max = if self.peek() == Some(b',') {
            self.pos += 1;
            self.number()?
        } else {
            Some(min)
        };
        if self.bump() != Some(b'}') {
            return Err(self.error_at(open, "unterminated repetition"));
        }
        if max.is_some_and(|m| m < min) {
            return Err(self.error_at(open, "repetition minimum exceeds maximum"));
        }
        Ok((min, max))
    }

    fn atom(&mut self) -> Result<RegexAst> {
        let start = self.pos;
        match self.bump() {
            Some(b'(') => {
                let inner = self.alternation()?;
                if self.bump() != Some(b')') {
                    return Err(self.error_at(start, "unmatched '('"));
                }
                Ok(inner)
            }
            Some(b'[') => self.class(start),
            Some(b'.') => Ok(dot_class()),
            Some(b'\\') => Ok(match self.escape(start)? {
                Escape::Byte(b) => RegexAst::Literal(b),
                Escape::Class(set) => RegexAst::CharClass { set, negated: false },
            }),
            Some(b'*' | b'+' | b'?' | b'{') => Err(self.error_at(start, "quantifier has nothing to repeat")),
            Some(b']') => Err(self.error_at(start, "unmatched ']'")),
            Some(b'}') => Err(self.error_at(start, "unmatched '}'")),
            Some(c) => Ok(RegexAst::Literal(c)),
            None => Err(self.error("unexpected end of pattern")),
        }
    }

    fn escape(&mut self, start: usize) -> Result<Escape> {
        match self.bump() {
            Some(c @ (b'\\' | b'.' | b'*' | b'+' | b'?' | b'(' | b')' | b'[' | b']' | b'{' | b'}' | b'|' | b'-' | b'^')) => {
                Ok(Escape::Byte(c))
            }
            Some(b'n') => Ok(Escape::Byte(b'\n')),
            Some(b't') => Ok(Escape::Byte(b'\t')),
            Some(b'd') => Ok(Escape::Class(digit_class())),
            Some(b'w') => Ok(Escape::Class(word_class())),
            Some(b's') => Ok(Escape::Class(space_class())),
            Some(_) => Err(self.error_at(start, "unknown escape")),
            None => Err(self.error_at(start, "trailing backslash")),
        }
    }

    fn class(&mut self, start: usize) -> Result<RegexAst> {
        let negated = self.peek() == Some(b'^');
        if negated {
            self.pos += 1;
        }
        let mut set = ByteSet::new();
        let mut first = true;
        loop {
            let item_start = self.pos;
            let lo = match self.bump() {
                None => return Err(self.error_at(start, "unmatched '['")),
                Some(b']') if !first => break,
                Some(b'\\') => match self.escape(item_start)? {
                    Escape::Byte(b) => b,
                    Escape::Class(s) => {
                        set.union_with(&s);
                        first = false;
                        continue;
                    }
                },
                Some(c) => c,
            };
            first = false;
            let is_range = self.peek() == Some(b'-') && self.src.get(self.pos + 1).is_some_and(|&c| c != b']');
            if !is_range {
                set.insert(lo);
                continue;
            }
            self.pos += 1;
            let hi_start = self.pos;
            let hi = match self.bump() {
                Some(b'\\') => match self.escape(hi_start)? {
                    Escape::Byte(b) => b,
                    Escape::Class(_) => return Err(self.error_at(hi_start, "class escape cannot end a range")),
                },
                Some(c) => c,
                None => return Err(self.error_at(start, "unmatched '['")),
            };
            if lo > hi {
                return Err(self.error_at(item_start, "range bounds out of order"));
            }
            set.insert_range(lo, hi);
        }
        if RegexAst::class_bytes(&set, negated).is_empty() {
            return Err(self.error_at(start, "character class matches nothing"));
        }
        Ok(RegexAst::CharClass { set, negated })
    }
}
