//! Freely reduced words over signed generator letters.

use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

use crate::op::Sign;

/// A generator with exponent `±1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: String,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: impl Into<String>, sign: Sign) -> Self {
        Letter { gen: gen.into(), sign }
    }

    pub fn pos(gen: impl Into<String>) -> Self {
        Letter::new(gen, Sign::Pos)
    }

    pub fn neg(gen: impl Into<String>) -> Self {
        Letter::new(gen, Sign::Neg)
    }

    pub fn inverse(&self) -> Letter {
        Letter { gen: self.gen.clone(), sign: self.sign.flip() }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.gen, self.sign.symbol())
    }
}

/// An element of the free group, stored freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Reduce an arbitrary letter sequence.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letter(l: Letter) -> Self {
        Word(alloc::vec![l])
    }

    /// Append one letter, cancelling against the last one if inverse.
    pub fn push(&mut self, l: Letter) {
        if self.0.last().is_some_and(|last| last.cancels(&l)) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self · other`, reduced.
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for l in &other.0 {
            w.push(l.clone());
        }
        w
    }

    /// `self⁻¹`.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// `v⁻¹ · g^ε · v`, reduced.
    pub fn conjugate(letter: &Letter, by: &Word) -> Word {
        by.inverse().concat(&Word::letter(letter.clone())).concat(by)
    }

    /// Does any letter use generator `g`?
    pub fn mentions(&self, g: &str) -> bool {
        self.0.iter().any(|l| l.gen == g)
    }

    /// Replace every letter `g^ε` by `r^ε`.
    pub(crate) fn replace_letter(&self, g: &str, r: &Word) -> Word {
        let mut out = Word::empty();
        for l in &self.0 {
            if l.gen == g {
                let piece = if l.sign == Sign::Pos { r.clone() } else { r.inverse() };
                out = out.concat(&piece);
            } else {
                out.push(l.clone());
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}
