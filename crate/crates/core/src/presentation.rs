//! Biquandle presentations of diagrams and generator elimination.
//!
//! Text format:
//!
//! ```text
//! kind: topological
//! gens: b f l
//! ((((b ^ f) ^ l) _ f) _ l) = b
//! ```
//!
//! A topological presentation carries the `R` identities
//! `x↑(y↓z) = x↑y`, `x↑̄(y↓z) = x↑̄y`, `x↓(y↑z) = x↓y` and `x↓̄(y↑z) = x↓̄y`
//! implicitly for all generators; [`materialize_r`] spells them out.

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::Diagram;
use crate::name::is_valid_name;
use crate::op::Op;
use crate::terms::{parse_term, ParseError, Term, TopTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Fundamental,
    Topological,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Fundamental => "fundamental",
            Kind::Topological => "topological",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fundamental" => Ok(Kind::Fundamental),
            "topological" => Ok(Kind::Topological),
            _ => Err(format!("unknown presentation kind {s:?}")),
        }
    }
}

/// An equation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Relation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Relation { lhs, rhs }
    }

    pub fn mentions(&self, g: &str) -> bool {
        self.lhs.mentions(g) || self.rhs.mentions(g)
    }

    pub fn size(&self) -> usize {
        self.lhs.size() + self.rhs.size()
    }

    /// Both sides agree syntactically, or (topological kind) as normal forms.
    pub fn is_trivial(&self, kind: Kind) -> bool {
        self.lhs == self.rhs || (kind == Kind::Topological && self.lhs.normalize() == self.rhs.normalize())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    Syntax { line: usize, message: String },
    Term { line: usize, error: ParseError },
    BadName { line: usize, name: String },
    DuplicateGenerator(String),
    Undeclared { line: usize, name: String },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            PresentationError::Term { line, error } => write!(f, "line {line}: {error}"),
            PresentationError::BadName { line, name } => write!(f, "line {line}: invalid generator name {name:?}"),
            PresentationError::DuplicateGenerator(g) => write!(f, "generator {g} declared twice"),
            PresentationError::Undeclared { line, name } => write!(f, "line {line}: undeclared generator {name}"),
        }
    }
}

impl core::error::Error for PresentationError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    pub kind: Kind,
}

impl Presentation {
    /// No relations.
    pub fn free(generators: &[&str], kind: Kind) -> Self {
        Presentation { generators: generators.iter().map(|g| String::from(*g)).collect(), relations: Vec::new(), kind }
    }

    pub fn size(&self) -> usize {
        self.relations.iter().map(Relation::size).sum()
    }

    /// Canonical text form, ending in a newline.
    pub fn to_text(&self) -> String {
        let mut s = format!("kind: {}\ngens: {}\n", self.kind, self.generators.join(" "));
        for r in &self.relations {
            s += &format!("{r}\n");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut kind = None;
        let mut generators: Option<Vec<String>> = None;
        let mut relations = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("kind:") {
                let parsed = rest.trim().parse().map_err(|message| PresentationError::Syntax { line, message })?;
                kind = Some(parsed);
            } else if let Some(rest) = content.strip_prefix("gens:") {
                let mut gens: Vec<String> = Vec::new();
                for g in rest.split_whitespace() {
                    if !is_valid_name(g) {
                        return Err(PresentationError::BadName { line, name: g.into() });
                    }
                    if gens.iter().any(|h| h == g) {
                        return Err(PresentationError::DuplicateGenerator(g.into()));
                    }
                    gens.push(g.into());
                }
                generators = Some(gens);
            } else {
                let gens = generators.as_ref().ok_or_else(|| PresentationError::Syntax {
                    line,
                    message: "relation before the `gens:` line".into(),
                })?;
                let (l, r) = content.split_once('=').ok_or_else(|| PresentationError::Syntax {
                    line,
                    message: format!("expected `lhs = rhs`, found {content:?}"),
                })?;
                let term = |s: &str, offset: usize| {
                    parse_term(s).map_err(|mut error| {
                        error.position += offset;
                        PresentationError::Term { line, error }
                    })
                };
                let rel = Relation::new(term(l, 0)?, term(r, l.len() + 1)?);
                for t in [&rel.lhs, &rel.rhs] {
                    if let Some(g) = t.generators().into_iter().find(|g| !gens.iter().any(|h| h == g)) {
                        return Err(PresentationError::Undeclared { line, name: g.into() });
                    }
                }
                relations.push(rel);
            }
        }
        let missing = |what: &str| PresentationError::Syntax { line: 0, message: format!("missing `{what}` line") };
        Ok(Presentation {
            kind: kind.ok_or_else(|| missing("kind:"))?,
            generators: generators.ok_or_else(|| missing("gens:"))?,
            relations,
        })
    }
}

impl FromStr for Presentation {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Presentation::parse(s)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn from_diagram(d: &Diagram, kind: Kind) -> Presentation {
    let relations = d.crossing_relations().into_iter().map(|(t, g)| Relation::new(t, Term::Gen(g))).collect();
    Presentation { generators: d.semiarcs().to_vec(), relations, kind }
}

/// Semiarcs modulo the crossing relations.
pub fn fundamental_presentation(d: &Diagram) -> Presentation {
    from_diagram(d, Kind::Fundamental)
}

/// The fundamental presentation with the `R` identities in force.
pub fn topological_presentation(d: &Diagram) -> Presentation {
    from_diagram(d, Kind::Topological)
}

/// The `R` identities for every ordered triple of generators, repeats
/// included: four per triple, triples in lexicographic order of position.
pub fn materialize_r(generators: &[String]) -> Vec<Relation> {
    let mut out = Vec::with_capacity(4 * generators.len().pow(3));
    let g = |s: &String| Term::Gen(s.clone());
    for a in generators {
        for b in generators {
            for c in generators {
                for (outer, inner) in
                    [(Op::Up, Op::Down), (Op::BarUp, Op::Down), (Op::Down, Op::Up), (Op::BarDown, Op::Up)]
                {
                    out.push(Relation::new(
                        Term::app(outer, g(a), Term::app(inner, g(b), g(c))),
                        Term::app(outer, g(a), g(b)),
                    ));
                }
            }
        }
    }
    out
}

/// Replace every occurrence of generator `g` in `t` by `r`.
pub fn substitute(t: &Term, g: &str, r: &Term) -> Term {
    t.substitute(g, r)
}

/// Eliminate generators until no relation can define one.
pub fn tietze_eliminate(p: &Presentation) -> Presentation {
    tietze_eliminate_keeping(p, &[])
}

/// [`tietze_eliminate`], never eliminating a generator listed in `keep`.
///
/// Each round first drops relations whose two sides agree (syntactically,
/// or as normal forms for the topological kind), then tries the kink rule,
/// and otherwise performs the single elimination step that leaves the
/// smallest relation set, ties going to the earliest relation.
///
/// A step solves one relation for a generator `g`:
///
/// - fundamental kind: the relation has the shape `g = t` (either side)
///   with `g` absent from `t`;
/// - topological kind: one side normalizes to `g ↑ w1 ↓ w2` with `g` absent
///   from everything else in the relation, and the other side to
///   `c ↑ u1 ↓ u2`; then `g = c ↑ (u1·w1⁻¹) ↓ (u2·w2⁻¹)`.
///
/// The kink rule removes a generator `h` that occurs only in a pair of
/// relations `g = h ↑ g`, `h = g ↓ h` (or the variant with up and down
/// exchanged, or the barred variants): the first relation determines `h`
/// from `g` uniquely and the second then holds by the kink axiom.
pub fn tietze_eliminate_keeping(p: &Presentation, keep: &[&str]) -> Presentation {
    let mut gens = p.generators.clone();
    let mut rels = p.relations.clone();
    let kind = p.kind;
    if kind == Kind::Topological {
        rels = rels.iter().map(canonical_topological).collect();
    }
    loop {
        rels.retain(|r| !r.is_trivial(kind));
        if let Some((h, i, j)) = find_kink(&rels) {
            rels.remove(j);
            rels.remove(i);
            gens.retain(|g| *g != h);
            continue;
        }
        let mut best: Option<(Score, String, Vec<Relation>)> = None;
        for (i, rel) in rels.iter().enumerate() {
            for side in 0..2 {
                let Some((g, value)) = solve(rel, side, kind) else { continue };
                if keep.contains(&g.as_str()) {
                    continue;
                }
                let next = eliminate(&rels, i, &g, &value, kind);
                let score = (next.iter().map(Relation::size).sum(), i, side);
                if best.as_ref().is_none_or(|(s, ..)| score < *s) {
                    best = Some((score, g, next));
                }
            }
        }
        let Some((_, g, next)) = best else { break };
        gens.retain(|h| *h != g);
        rels = next;
    }
    Presentation { generators: gens, relations: rels, kind }
}

/// (total relation size after the step, relation index, side).
type Score = (usize, usize, usize);

/// Solve `rel` for the generator on side `side` (0 = lhs), if eligible.
fn solve(rel: &Relation, side: usize, kind: Kind) -> Option<(String, Term)> {
    let (a, b) = if side == 0 { (&rel.lhs, &rel.rhs) } else { (&rel.rhs, &rel.lhs) };
    match kind {
        Kind::Fundamental => {
            let g = a.as_gen()?;
            (!b.mentions(g)).then(|| (String::from(g), b.clone()))
        }
        Kind::Topological => {
            let (x, y) = (a.normalize(), b.normalize());
            let g = x.base();
            if x.up().mentions(g) || x.down().mentions(g) || y.mentions(g) {
                return None;
            }
            let value =
                TopTriple::new(y.base(), y.up().concat(&x.up().inverse()), y.down().concat(&x.down().inverse()));
            Some((String::from(g), value.to_term()))
        }
    }
}

fn eliminate(rels: &[Relation], skip: usize, g: &str, value: &Term, kind: Kind) -> Vec<Relation> {
    rels.iter()
        .enumerate()
        .filter(|&(k, _)| k != skip)
        .map(|(_, r)| {
            let r = Relation::new(r.lhs.substitute(g, value), r.rhs.substitute(g, value));
            match kind {
                Kind::Fundamental => r,
                Kind::Topological => canonical_topological(&r),
            }
        })
        .filter(|r| !r.is_trivial(kind))
        .collect()
}

/// Normal-form spelling of a topological relation. When both sides share
/// their base `g`, the relation becomes `g ↑ (u1·v1⁻¹) ↓ (u2·v2⁻¹) = g`.
fn canonical_topological(r: &Relation) -> Relation {
    let (x, y) = (r.lhs.normalize(), r.rhs.normalize());
    if x.base() == y.base() {
        let merged = TopTriple::new(x.base(), x.up().concat(&y.up().inverse()), x.down().concat(&y.down().inverse()));
        Relation::new(merged.to_term(), Term::gen(x.base()))
    } else {
        Relation::new(x.to_term(), y.to_term())
    }
}

/// Find relations `i < j` forming a kink pair and the generator `h` they
/// define, where `h` occurs nowhere else.
fn find_kink(rels: &[Relation]) -> Option<(String, usize, usize)> {
    // (op, defined, other) for relations `defined = op(target, operand)`.
    let shape = |r: &Relation| -> Option<(Op, String, String, String)> {
        let (t, g) = match (&r.lhs, &r.rhs) {
            (t @ Term::App(..), Term::Gen(g)) | (Term::Gen(g), t @ Term::App(..)) => (t, g),
            _ => return None,
        };
        let Term::App(op, x, y) = t else { return None };
        Some((*op, g.clone(), String::from(x.as_gen()?), String::from(y.as_gen()?)))
    };
    let partner = |op: Op| match op {
        Op::Up => Op::Down,
        Op::Down => Op::Up,
        Op::BarUp => Op::BarDown,
        Op::BarDown => Op::BarUp,
    };
    for i in 0..rels.len() {
        let Some((op1, g, h, y)) = shape(&rels[i]) else { continue };
        // rels[i] reads g = h op1 g.
        if y != g || h == g {
            continue;
        }
        for j in 0..rels.len() {
            if j == i {
                continue;
            }
            let Some((op2, h2, x2, y2)) = shape(&rels[j]) else { continue };
            // rels[j] reads h = g op2 h.
            if op2 != partner(op1) || h2 != h || x2 != g || y2 != h {
                continue;
            }
            if rels.iter().enumerate().all(|(k, r)| k == i || k == j || !r.mentions(&h)) {
                return Some((h, i.min(j), i.max(j)));
            }
        }
    }
    None
}
