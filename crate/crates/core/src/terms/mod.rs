//! Terms over named generators, free-group words and the free topological
//! model.
//!
//! [`Term::normalize`] sends a term to its triple `a ^[w1] _[w2]` by
//! structural recursion: the children are normalized and the matching
//! triple operation is applied. In every finite biquandle satisfying the
//! `R` identities a term and its normal form evaluate identically.

mod compiled;
mod parse;
mod triple;
mod word;

use core::fmt;

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::FiniteBiquandle;
use crate::op::Op;

pub(crate) use compiled::Compiled;
pub use parse::{parse_term, parse_triple, ParseError};
pub use triple::TopTriple;
pub use word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Gen(String),
    /// `App(op, target, operand)` is `target op operand`.
    App(Op, Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    Unbound(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Unbound(g) => write!(f, "generator {g:?} has no value"),
        }
    }
}

impl core::error::Error for EvalError {}

impl Term {
    pub fn gen(name: impl Into<String>) -> Term {
        Term::Gen(name.into())
    }

    pub fn app(op: Op, target: Term, operand: Term) -> Term {
        Term::App(op, Box::new(target), Box::new(operand))
    }

    pub fn up(target: Term, operand: Term) -> Term {
        Term::app(Op::Up, target, operand)
    }

    pub fn down(target: Term, operand: Term) -> Term {
        Term::app(Op::Down, target, operand)
    }

    pub fn bar_up(target: Term, operand: Term) -> Term {
        Term::app(Op::BarUp, target, operand)
    }

    pub fn bar_down(target: Term, operand: Term) -> Term {
        Term::app(Op::BarDown, target, operand)
    }

    pub fn as_gen(&self) -> Option<&str> {
        match self {
            Term::Gen(g) => Some(g),
            Term::App(..) => None,
        }
    }

    /// Number of operation nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Gen(_) => 0,
            Term::App(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn mentions(&self, g: &str) -> bool {
        match self {
            Term::Gen(h) => h == g,
            Term::App(_, l, r) => l.mentions(g) || r.mentions(g),
        }
    }

    /// Generators in order of first occurrence (left to right).
    pub fn generators(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Gen(g) => {
                if !out.contains(&g.as_str()) {
                    out.push(g);
                }
            }
            Term::App(_, l, r) => {
                l.collect_generators(out);
                r.collect_generators(out);
            }
        }
    }

    /// Replace every leaf `g` by `r`.
    pub fn substitute(&self, g: &str, r: &Term) -> Term {
        match self {
            Term::Gen(h) if h == g => r.clone(),
            Term::Gen(_) => self.clone(),
            Term::App(op, l, rr) => Term::app(*op, l.substitute(g, r), rr.substitute(g, r)),
        }
    }

    /// Structural evaluation in `b`; bar nodes use the derived tables.
    pub fn eval(&self, env: &BTreeMap<String, usize>, b: &FiniteBiquandle) -> Result<usize, EvalError> {
        match self {
            Term::Gen(g) => env.get(g).copied().ok_or_else(|| EvalError::Unbound(g.clone())),
            Term::App(op, l, r) => Ok(b.apply(*op, l.eval(env, b)?, r.eval(env, b)?)),
        }
    }

    /// The normal form in the free topological model.
    pub fn normalize(&self) -> TopTriple {
        match self {
            Term::Gen(g) => TopTriple::generator(g.clone()),
            Term::App(op, l, r) => l.normalize().apply(*op, &r.normalize()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(g) => f.write_str(g),
            Term::App(op, l, r) => write!(f, "({l} {op} {r})"),
        }
    }
}

/// Canonical text of a term: fully parenthesized, single spaces around
/// operators.
pub fn format_term(t: &Term) -> String {
    alloc::format!("{t}")
}

pub fn eval_term(t: &Term, env: &BTreeMap<String, usize>, b: &FiniteBiquandle) -> Result<usize, EvalError> {
    t.eval(env, b)
}

pub fn eval_triple(
    x: &TopTriple,
    env: &BTreeMap<String, usize>,
    b: &FiniteBiquandle,
) -> Result<usize, EvalError> {
    x.eval(env, b)
}

pub fn normalize(t: &Term) -> TopTriple {
    t.normalize()
}
