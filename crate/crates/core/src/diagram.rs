//! Oriented link diagrams as signed crossings with role-tagged semiarcs.
//!
//! Text format, one record per line:
//!
//! ```text
//! # comment
//! + u o u' o'     positive crossing: under-in, over-in, under-out, over-out
//! - u o u' o'     negative crossing
//! O name          crossingless component
//! ```
//!
//! At a positive crossing the under-strand leaves as `u ↑ o` and the
//! over-strand as `o ↓ u`; a negative crossing uses `↑̄` and `↓̄`.

use core::fmt;
use core::str::FromStr;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::name::is_valid_name;
use crate::op::{Op, Sign};
use crate::terms::Term;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: String,
    pub over_in: String,
    pub under_out: String,
    pub over_out: String,
}

impl Crossing {
    pub fn new(sign: Sign, under_in: &str, over_in: &str, under_out: &str, over_out: &str) -> Self {
        Crossing {
            sign,
            under_in: under_in.into(),
            over_in: over_in.into(),
            under_out: under_out.into(),
            over_out: over_out.into(),
        }
    }

    /// `(under relation, over relation)` as `(term, outgoing semiarc)`.
    pub fn relations(&self) -> [(Term, String); 2] {
        let (up, down) = match self.sign {
            Sign::Pos => (Op::Up, Op::Down),
            Sign::Neg => (Op::BarUp, Op::BarDown),
        };
        let u = || Term::gen(self.under_in.clone());
        let o = || Term::gen(self.over_in.clone());
        [
            (Term::app(up, u(), o()), self.under_out.clone()),
            (Term::app(down, o(), u()), self.over_out.clone()),
        ]
    }

    fn ins(&self) -> [&str; 2] {
        [&self.under_in, &self.over_in]
    }

    fn outs(&self) -> [&str; 2] {
        [&self.under_out, &self.over_out]
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.sign.symbol(),
            self.under_in,
            self.over_in,
            self.under_out,
            self.over_out
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// A line that is neither a crossing nor a loop record.
    Syntax { line: usize, message: String },
    BadName { line: usize, name: String },
    /// A semiarc used twice as an incoming strand.
    DuplicateIn(String),
    /// A semiarc used twice as an outgoing strand.
    DuplicateOut(String),
    /// A semiarc that never enters or never leaves a crossing.
    Dangling(String),
    /// A crossingless component whose name is already in use.
    DuplicateLoop(String),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            DiagramError::BadName { line, name } => write!(f, "line {line}: invalid semiarc name {name:?}"),
            DiagramError::DuplicateIn(s) => write!(f, "semiarc {s} enters more than one crossing slot"),
            DiagramError::DuplicateOut(s) => write!(f, "semiarc {s} leaves more than one crossing slot"),
            DiagramError::Dangling(s) => write!(f, "semiarc {s} is dangling"),
            DiagramError::DuplicateLoop(s) => write!(f, "crossingless component {s} reuses a name"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// A validated diagram. Semiarcs are listed in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    semiarcs: Vec<String>,
    crossings: Vec<Crossing>,
    loops: Vec<String>,
}

impl Diagram {
    /// Validate crossings and crossingless components.
    pub fn new(crossings: Vec<Crossing>, loops: Vec<String>) -> Result<Self, DiagramError> {
        let mut semiarcs: Vec<String> = Vec::new();
        let mut ins: BTreeMap<&str, ()> = BTreeMap::new();
        let mut outs: BTreeMap<&str, ()> = BTreeMap::new();
        for c in &crossings {
            for (pos, name) in [&c.under_in, &c.over_in, &c.under_out, &c.over_out].into_iter().enumerate() {
                if !is_valid_name(name) {
                    return Err(DiagramError::BadName { line: 0, name: name.clone() });
                }
                if !semiarcs.contains(name) {
                    semiarcs.push(name.clone());
                }
                let (set, err): (_, fn(String) -> DiagramError) = if pos < 2 {
                    (&mut ins, DiagramError::DuplicateIn)
                } else {
                    (&mut outs, DiagramError::DuplicateOut)
                };
                if set.insert(name, ()).is_some() {
                    return Err(err(name.clone()));
                }
            }
        }
        if let Some(s) = semiarcs.iter().find(|s| !ins.contains_key(s.as_str()) || !outs.contains_key(s.as_str())) {
            return Err(DiagramError::Dangling(s.clone()));
        }
        for l in &loops {
            if !is_valid_name(l) {
                return Err(DiagramError::BadName { line: 0, name: l.clone() });
            }
            if semiarcs.contains(l) {
                return Err(DiagramError::DuplicateLoop(l.clone()));
            }
            semiarcs.push(l.clone());
        }
        Ok(Diagram { semiarcs, crossings, loops })
    }

    /// Closure of a braid on `strands` strands.
    ///
    /// Letter `i > 0` is `σ_i` and `-i` is `σ_i⁻¹`, for `1 ≤ i < strands`.
    /// At `σ_i` the strand in position `i` (1-based) passes over the one
    /// in position `i + 1`; `σ_i⁻¹` is its mirror. Positions never touched
    /// by a crossing close up into crossingless components.
    pub fn braid_closure(strands: usize, word: &[i32]) -> Self {
        let mut fresh = 0usize;
        let mut name = || {
            fresh += 1;
            format!("s{}", fresh - 1)
        };
        let start: Vec<String> = (0..strands).map(|_| name()).collect();
        let mut current = start.clone();
        let mut crossings = Vec::new();
        for &letter in word {
            let i = letter.unsigned_abs() as usize;
            assert!(i >= 1 && i < strands, "braid letter {letter} out of range");
            let (left, right) = (current[i - 1].clone(), current[i].clone());
            let (to_right, to_left) = (name(), name());
            crossings.push(if letter > 0 {
                Crossing::new(Sign::Pos, &right, &left, &to_left, &to_right)
            } else {
                Crossing::new(Sign::Neg, &left, &right, &to_right, &to_left)
            });
            current[i - 1] = to_left;
            current[i] = to_right;
        }
        let mut loops = Vec::new();
        let mut rename = BTreeMap::new();
        for (first, last) in start.iter().zip(&current) {
            if first == last {
                loops.push(first.clone());
            } else {
                rename.insert(last.clone(), first.clone());
            }
        }
        let fix = |s: &mut String| {
            if let Some(r) = rename.get(s.as_str()) {
                *s = r.clone();
            }
        };
        for c in &mut crossings {
            fix(&mut c.under_out);
            fix(&mut c.over_out);
        }
        Diagram::new(crossings, loops).expect("braid closures are valid diagrams")
    }

    pub fn semiarcs(&self) -> &[String] {
        &self.semiarcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn loops(&self) -> &[String] {
        &self.loops
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.semiarcs.iter().position(|s| s == name)
    }

    /// Two relations per crossing, under-strand first, each as
    /// `(term, outgoing semiarc)`.
    pub fn crossing_relations(&self) -> Vec<(Term, String)> {
        self.crossings.iter().flat_map(Crossing::relations).collect()
    }

    /// Link components, each traced along its through-strands starting at
    /// its first-appearing semiarc. Components are ordered by that semiarc.
    pub fn components(&self) -> Vec<Vec<String>> {
        let mut next: BTreeMap<&str, &str> = BTreeMap::new();
        for c in &self.crossings {
            for (i, o) in c.ins().into_iter().zip(c.outs()) {
                next.insert(i, o);
            }
        }
        let mut seen = vec![false; self.semiarcs.len()];
        let mut out = Vec::new();
        for (k, s) in self.semiarcs.iter().enumerate() {
            if seen[k] {
                continue;
            }
            let mut comp = Vec::new();
            let mut cur = s.as_str();
            loop {
                let idx = self.index_of(cur).expect("semiarc is declared");
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                comp.push(String::from(cur));
                match next.get(cur) {
                    Some(n) => cur = n,
                    None => break,
                }
            }
            out.push(comp);
        }
        out
    }

    /// Canonical text: one record per line, crossings then loops.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.crossings {
            s += &format!("{c}\n");
        }
        for l in &self.loops {
            s += &format!("O {l}\n");
        }
        s
    }
}

/// Parse the line-based diagram format.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut crossings = Vec::new();
    let mut loops = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        let check = |name: &str| {
            if is_valid_name(name) {
                Ok(())
            } else {
                Err(DiagramError::BadName { line, name: name.into() })
            }
        };
        match fields.as_slice() {
            [] => {}
            [sign @ ("+" | "-"), u, o, uo, oo] => {
                for n in [u, o, uo, oo] {
                    check(n)?;
                }
                let sign = if *sign == "+" { Sign::Pos } else { Sign::Neg };
                crossings.push(Crossing::new(sign, u, o, uo, oo));
            }
            ["O", name] => {
                check(name)?;
                loops.push(String::from(*name));
            }
            _ => {
                return Err(DiagramError::Syntax {
                    line,
                    message: format!("expected `± u o u' o'` or `O name`, found {:?}", content.trim()),
                })
            }
        }
    }
    Diagram::new(crossings, loops)
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}
