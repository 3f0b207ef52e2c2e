//! Biquandle algebra and coloring invariants of oriented link diagrams.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`algebra`]: finite biquandles given by operation tables, axiom
//!   checking, the derived bar operations, the `R` identities and
//!   homomorphism enumeration.
//! - [`terms`]: terms over generators, reduced free-group words and the
//!   free topological model whose elements are triples `a ^[w1] _[w2]`.
//! - [`diagram`]: link diagrams given as signed crossings with role-tagged
//!   semiarcs.
//! - [`presentation`]: fundamental and topological presentations of a
//!   diagram and generator elimination.
//! - [`invariants`]: coloring counts of diagrams and presentations into
//!   finite biquandles.
//!
//! Operation tables are indexed `table[a][b] = a ∘ b`: the first index is
//! the element being acted on, the second is the operand.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod diagram;
pub mod invariants;
pub mod presentation;
pub mod terms;

mod name;
mod op;

pub use algebra::{
    enumerate_biquandles, homomorphisms, validate_biquandle, Axiom, AxiomFailure, AxiomReport,
    FiniteBiquandle, RViolation, TableError, ValidationError,
};
pub use diagram::{parse_pd, Crossing, Diagram, DiagramError};
pub use invariants::{
    count_colorings, distinguish, enumerate_colorings, hom_count_presentation, oracle_colorings,
    oracle_count, separate_terms, Coloring, Mode, Separation, TermSeparation,
};
pub use name::{is_valid_name, NameError};
pub use op::{Op, Sign};
pub use presentation::{
    fundamental_presentation, materialize_r, tietze_eliminate, tietze_eliminate_keeping,
    topological_presentation, Kind, Presentation, PresentationError, Relation,
};
pub use terms::{
    eval_term, eval_triple, format_term, normalize, parse_term, parse_triple, EvalError, Letter, ParseError, Term,
    TopTriple, Word,
};
