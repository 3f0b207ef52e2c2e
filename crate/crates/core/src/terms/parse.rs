//! Parsers for the fully parenthesized term grammar and the triple text form.
//!
//! ```text
//! term := name | "(" term op term ")"
//! op   := "^" | "_" | "^-" | "_-"
//! name := [a-z0-9]+
//! ```

use core::fmt;
use core::str::FromStr;

use alloc::boxed::Box;
use alloc::string::{String, ToString};

use super::triple::TopTriple;
use super::word::{Letter, Word};
use super::Term;
use crate::op::{Op, Sign};

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn describe(&self) -> String {
        match self.src[self.pos..].chars().next() {
            Some(c) => alloc::format!("unexpected {c:?}"),
            None => "unexpected end of input".to_string(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos, alloc::format!("expected {:?}, {}", byte as char, self.describe())))
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(self.pos, alloc::format!("expected a name, {}", self.describe())));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn op(&mut self) -> Result<Op, ParseError> {
        self.skip_ws();
        let up_type = match self.peek() {
            Some(b'^') => true,
            Some(b'_') => false,
            _ => {
                let msg = alloc::format!("expected an operator, {}", self.describe());
                return Err(ParseError::new(self.pos, msg));
            }
        };
        self.pos += 1;
        let sign = if self.peek() == Some(b'-') {
            self.pos += 1;
            Sign::Neg
        } else {
            Sign::Pos
        };
        Ok(Op::from_parts(up_type, sign))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'(') {
            return self.name().map(Term::Gen);
        }
        self.pos += 1;
        let left = self.term()?;
        let op = self.op()?;
        let right = self.term()?;
        self.expect(b')')?;
        Ok(Term::App(op, Box::new(left), Box::new(right)))
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        self.expect(b'[')?;
        let mut word = Word::empty();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(word);
        }
        loop {
            let gen = self.name()?;
            let sign = match self.peek().and_then(|c| Sign::from_symbol(c as char)) {
                Some(s) => s,
                None => {
                    let msg = alloc::format!("expected '+' or '-', {}", self.describe());
                    return Err(ParseError::new(self.pos, msg));
                }
            };
            self.pos += 1;
            word.push(Letter::new(gen, sign));
            self.skip_ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(word);
                }
                _ => {
                    let msg = alloc::format!("expected ',' or ']', {}", self.describe());
                    return Err(ParseError::new(self.pos, msg));
                }
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(ParseError::new(self.pos, alloc::format!("trailing input, {}", self.describe())))
        }
    }
}

/// Parse one term; surrounding whitespace is ignored.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut c = Cursor::new(text);
    let t = c.term()?;
    c.finish()?;
    Ok(t)
}

/// Parse the triple text form `base ^[w1] _[w2]`.
pub fn parse_triple(text: &str) -> Result<TopTriple, ParseError> {
    let mut c = Cursor::new(text);
    let base = c.name()?;
    c.expect(b'^')?;
    let up = c.word()?;
    c.expect(b'_')?;
    let down = c.word()?;
    c.finish()?;
    Ok(TopTriple::new(base, up, down))
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

impl FromStr for TopTriple {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_triple(s)
    }
}
