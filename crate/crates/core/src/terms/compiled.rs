//! Terms compiled against a fixed generator list, for fast repeated
//! evaluation while counting colorings.

use alloc::vec::Vec;

use super::Term;
use crate::algebra::FiniteBiquandle;
use crate::op::Op;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Gen(usize),
    App(Op),
}

/// A term in postfix form over generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Compiled {
    nodes: Vec<Node>,
}

impl Compiled {
    /// Compile `t`, resolving each generator through `index`.
    pub(crate) fn new(t: &Term, index: &impl Fn(&str) -> Option<usize>) -> Option<Compiled> {
        let mut nodes = Vec::new();
        push(t, index, &mut nodes)?;
        Some(Compiled { nodes })
    }

    pub(crate) fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().filter_map(|n| match n {
            Node::Gen(i) => Some(*i),
            Node::App(_) => None,
        })
    }

    /// Evaluate with `colors[i]` the value of generator `i`.
    ///
    /// Returns `None` if a needed generator is still `None`.
    pub(crate) fn eval(&self, colors: &[Option<usize>], b: &FiniteBiquandle, stack: &mut Vec<usize>) -> Option<usize> {
        stack.clear();
        for node in &self.nodes {
            match *node {
                Node::Gen(i) => stack.push(colors[i]?),
                Node::App(op) => {
                    let r = stack.pop().expect("well-formed postfix");
                    let l = stack.pop().expect("well-formed postfix");
                    stack.push(b.apply(op, l, r));
                }
            }
        }
        stack.pop()
    }
}

fn push(t: &Term, index: &impl Fn(&str) -> Option<usize>, out: &mut Vec<Node>) -> Option<()> {
    match t {
        Term::Gen(g) => out.push(Node::Gen(index(g)?)),
        Term::App(op, l, r) => {
            push(l, index, out)?;
            push(r, index, out)?;
            out.push(Node::App(*op));
        }
    }
    Some(())
}
