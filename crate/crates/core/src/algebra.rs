//! Finite biquandles as explicit operation tables.
//!
//! A table is stored row-major with `table[a][b] = a ∘ b`. The map
//! `f_b(x) = x ↑ b` is therefore a *column* of the up table, and likewise
//! `g_b(x) = x ↓ b` for the down table.

mod enumerate;

use core::fmt;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::op::Op;

pub use enumerate::{enumerate_biquandles, MAX_ENUMERATION_ORDER};

/// Malformed operation tables, reported before any axiom is looked at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    Empty,
    /// Row `row` of the named table does not have `order` entries.
    NotSquare { table: &'static str, row: usize },
    OrderMismatch { up: usize, down: usize },
    EntryOutOfRange { table: &'static str, row: usize, col: usize, value: usize },
    LabelCount { expected: usize, found: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Empty => f.write_str("tables must have at least one row"),
            TableError::NotSquare { table, row } => {
                write!(f, "{table} table is not square (row {row})")
            }
            TableError::OrderMismatch { up, down } => {
                write!(f, "up table has order {up} but down table has order {down}")
            }
            TableError::EntryOutOfRange { table, row, col, value } => {
                write!(f, "{table}[{row}][{col}] = {value} is out of range")
            }
            TableError::LabelCount { expected, found } => {
                write!(f, "expected {expected} labels, found {found}")
            }
        }
    }
}

impl core::error::Error for TableError {}

/// One axiom category. Reports carry at most one failure per category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `x ↦ x ↑ b` is a bijection for every `b`.
    UpBijective,
    /// `x ↦ x ↓ b` is a bijection for every `b`.
    DownBijective,
    /// `S(x, y) = (y ↓ x, x ↑ y)` is a bijection.
    SwitchBijective,
    /// `f_a⁻¹(a) = a ↓ f_a⁻¹(a)`.
    UpKink,
    /// `g_a⁻¹(a) = a ↑ g_a⁻¹(a)`.
    DownKink,
    /// `a↑b↑c = a↑(c↓b)↑(b↑c)`.
    UpInterchange,
    /// `a↓b↑(c↓(b↑a)) = a↑c↓(b↑(c↓a))`.
    RuleOfFive,
    /// `a↓b↓c = a↓(c↑b)↓(b↓c)`.
    DownInterchange,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::UpBijective,
        Axiom::DownBijective,
        Axiom::SwitchBijective,
        Axiom::UpKink,
        Axiom::DownKink,
        Axiom::UpInterchange,
        Axiom::RuleOfFive,
        Axiom::DownInterchange,
    ];

    /// Stable identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            Axiom::UpBijective => "axiom1-up-bijective",
            Axiom::DownBijective => "axiom1-down-bijective",
            Axiom::SwitchBijective => "axiom1-switch-bijective",
            Axiom::UpKink => "axiom2-up",
            Axiom::DownKink => "axiom2-down",
            Axiom::UpInterchange => "axiom3-up-interchange",
            Axiom::RuleOfFive => "axiom3-rule-of-five",
            Axiom::DownInterchange => "axiom3-down-interchange",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A witnessed axiom failure.
///
/// For the three bijectivity categories `left` and `right` are two distinct
/// arguments with the same image: `witness = [b, x1, x2]` for the column
/// maps and `witness = [x1, y1, x2, y2]` for `S` (with `left = x1·n + y1`,
/// `right = x2·n + y2`). For every other category `left` and `right` are the
/// two sides of the violated equality evaluated at `witness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}: {} vs {}", self.axiom, self.witness, self.left, self.right)
    }
}

/// Outcome of an exhaustive axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    Malformed(TableError),
    Axioms(AxiomReport),
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::Malformed(e) => write!(f, "malformed tables: {e}"),
            ValidationError::Axioms(report) => {
                f.write_str("not a biquandle")?;
                for failure in &report.failures {
                    write!(f, "; {failure}")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for ValidationError {}

impl From<TableError> for ValidationError {
    fn from(e: TableError) -> Self {
        ValidationError::Malformed(e)
    }
}

/// The four operand-independence identities making up `R_{a,b,c}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RIdentity {
    /// `a ↑ (b ↓ c) = a ↑ b`
    UpIgnoresDown,
    /// `a ↑̄ (b ↓ c) = a ↑̄ b`
    BarUpIgnoresDown,
    /// `a ↓ (b ↑ c) = a ↓ b`
    DownIgnoresUp,
    /// `a ↓̄ (b ↑ c) = a ↓̄ b`
    BarDownIgnoresUp,
}

impl RIdentity {
    pub const ALL: [RIdentity; 4] = [
        RIdentity::UpIgnoresDown,
        RIdentity::BarUpIgnoresDown,
        RIdentity::DownIgnoresUp,
        RIdentity::BarDownIgnoresUp,
    ];

    /// `(outer, inner)`: the identity reads `a outer (b inner c) = a outer b`.
    pub fn ops(self) -> (Op, Op) {
        match self {
            RIdentity::UpIgnoresDown => (Op::Up, Op::Down),
            RIdentity::BarUpIgnoresDown => (Op::BarUp, Op::Down),
            RIdentity::DownIgnoresUp => (Op::Down, Op::Up),
            RIdentity::BarDownIgnoresUp => (Op::BarDown, Op::Up),
        }
    }
}

impl fmt::Display for RIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (outer, inner) = self.ops();
        write!(f, "(a {outer} (b {inner} c)) = (a {outer} b)")
    }
}

/// First violated `R` identity, scanning triples lexicographically and the
/// four identities in declaration order within a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RViolation {
    pub identity: RIdentity,
    pub triple: (usize, usize, usize),
    pub left: usize,
    pub right: usize,
}

/// A validated finite biquandle with its derived bar tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBiquandle {
    order: usize,
    up: Vec<usize>,
    down: Vec<usize>,
    bar_up: Vec<usize>,
    bar_down: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Validate a pair of tables, returning the biquandle or the axiom report.
pub fn validate_biquandle(
    up: &[Vec<usize>],
    down: &[Vec<usize>],
) -> Result<FiniteBiquandle, ValidationError> {
    let (order, up, down) = flatten(up, down)?;
    let report = check_flat(order, &up, &down);
    if !report.passed {
        return Err(ValidationError::Axioms(report));
    }
    Ok(FiniteBiquandle::from_valid_flat(order, up, down))
}

/// Run every axiom check and return the full report, passing or not.
pub fn check_axioms(up: &[Vec<usize>], down: &[Vec<usize>]) -> Result<AxiomReport, TableError> {
    let (order, up, down) = flatten(up, down)?;
    Ok(check_flat(order, &up, &down))
}

fn flatten(
    up: &[Vec<usize>],
    down: &[Vec<usize>],
) -> Result<(usize, Vec<usize>, Vec<usize>), TableError> {
    let n = up.len();
    if n == 0 {
        return Err(TableError::Empty);
    }
    if down.len() != n {
        return Err(TableError::OrderMismatch { up: n, down: down.len() });
    }
    let flat = |rows: &[Vec<usize>], table: &'static str| {
        let mut cells = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(TableError::NotSquare { table, row });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(TableError::EntryOutOfRange { table, row, col, value });
                }
                cells.push(value);
            }
        }
        Ok(cells)
    };
    let up = flat(up, "up")?;
    let down = flat(down, "down")?;
    Ok((n, up, down))
}

/// Inverse of the column map `x ↦ table[x][col]`, if it is a bijection.
fn column_inverse(n: usize, table: &[usize], col: usize) -> Option<Vec<usize>> {
    let mut inv = vec![usize::MAX; n];
    for x in 0..n {
        let y = table[x * n + col];
        if inv[y] != usize::MAX {
            return None;
        }
        inv[y] = x;
    }
    Some(inv)
}

/// First colliding pair `x1 < x2` in a column, if any.
fn column_collision(n: usize, table: &[usize], col: usize) -> Option<(usize, usize)> {
    let mut seen = vec![usize::MAX; n];
    for x in 0..n {
        let y = table[x * n + col];
        if seen[y] != usize::MAX {
            return Some((seen[y], x));
        }
        seen[y] = x;
    }
    None
}

pub(crate) fn check_flat(n: usize, up: &[usize], down: &[usize]) -> AxiomReport {
    let u = |a: usize, b: usize| up[a * n + b];
    let d = |a: usize, b: usize| down[a * n + b];
    let mut failures = Vec::new();

    for (axiom, table) in [(Axiom::UpBijective, up), (Axiom::DownBijective, down)] {
        if let Some((b, (x1, x2))) =
            (0..n).find_map(|b| column_collision(n, table, b).map(|c| (b, c)))
        {
            failures.push(AxiomFailure { axiom, witness: vec![b, x1, x2], left: x1, right: x2 });
        }
    }

    let mut seen = vec![usize::MAX; n * n];
    'switch: for x in 0..n {
        for y in 0..n {
            let image = d(y, x) * n + u(x, y);
            let here = x * n + y;
            if seen[image] != usize::MAX {
                let first = seen[image];
                failures.push(AxiomFailure {
                    axiom: Axiom::SwitchBijective,
                    witness: vec![first / n, first % n, x, y],
                    left: first,
                    right: here,
                });
                break 'switch;
            }
            seen[image] = here;
        }
    }

    // Axiom 2 is only meaningful where the relevant column map is invertible.
    for a in 0..n {
        if let Some(inv) = column_inverse(n, up, a) {
            let x = inv[a];
            if x != d(a, x) {
                failures.push(AxiomFailure {
                    axiom: Axiom::UpKink,
                    witness: vec![a],
                    left: x,
                    right: d(a, x),
                });
                break;
            }
        }
    }
    for a in 0..n {
        if let Some(inv) = column_inverse(n, down, a) {
            let y = inv[a];
            if y != u(a, y) {
                failures.push(AxiomFailure {
                    axiom: Axiom::DownKink,
                    witness: vec![a],
                    left: y,
                    right: u(a, y),
                });
                break;
            }
        }
    }

    let mut first = [None, None, None];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let sides = [
                    (u(u(a, b), c), u(u(a, d(c, b)), u(b, c))),
                    (u(d(a, b), d(c, u(b, a))), d(u(a, c), u(b, d(c, a)))),
                    (d(d(a, b), c), d(d(a, u(c, b)), d(b, c))),
                ];
                for (slot, (l, r)) in first.iter_mut().zip(sides) {
                    if slot.is_none() && l != r {
                        *slot = Some(([a, b, c], l, r));
                    }
                }
            }
        }
    }
    let third = [Axiom::UpInterchange, Axiom::RuleOfFive, Axiom::DownInterchange];
    for (axiom, slot) in third.into_iter().zip(first) {
        if let Some((witness, left, right)) = slot {
            failures.push(AxiomFailure { axiom, witness: witness.to_vec(), left, right });
        }
    }

    AxiomReport { passed: failures.is_empty(), failures }
}

impl FiniteBiquandle {
    /// Build from flat tables already known to pass every axiom.
    pub(crate) fn from_valid_flat(order: usize, up: Vec<usize>, down: Vec<usize>) -> Self {
        let n = order;
        let mut bar_up = vec![0; n * n];
        let mut bar_down = vec![0; n * n];
        // S(x, y) = (p, q) = (y↓x, x↑y) and S⁻¹(p, q) = (q ↑̄ p, p ↓̄ q).
        for x in 0..n {
            for y in 0..n {
                let p = down[y * n + x];
                let q = up[x * n + y];
                bar_up[q * n + p] = x;
                bar_down[p * n + q] = y;
            }
        }
        FiniteBiquandle { order, up, down, bar_up, bar_down, labels: None }
    }

    /// Validate tables given by closures.
    pub fn from_fn(
        order: usize,
        up: impl Fn(usize, usize) -> usize,
        down: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ValidationError> {
        let rows = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..order).map(|a| (0..order).map(|b| op(a, b)).collect()).collect()
        };
        validate_biquandle(&rows(&up), &rows(&down))
    }

    /// Both operations are first-argument projection.
    pub fn trivial(order: usize) -> Self {
        assert!(order > 0, "a biquandle needs at least one element");
        let cells: Vec<usize> = (0..order * order).map(|i| i / order).collect();
        Self::from_valid_flat(order, cells.clone(), cells)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TableError> {
        if labels.len() != self.order {
            return Err(TableError::LabelCount { expected: self.order, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn up(&self, a: usize, b: usize) -> usize {
        self.up[a * self.order + b]
    }

    #[inline]
    pub fn down(&self, a: usize, b: usize) -> usize {
        self.down[a * self.order + b]
    }

    #[inline]
    pub fn bar_up(&self, a: usize, b: usize) -> usize {
        self.bar_up[a * self.order + b]
    }

    #[inline]
    pub fn bar_down(&self, a: usize, b: usize) -> usize {
        self.bar_down[a * self.order + b]
    }

    #[inline]
    pub fn apply(&self, op: Op, a: usize, b: usize) -> usize {
        self.flat(op)[a * self.order + b]
    }

    pub(crate) fn flat(&self, op: Op) -> &[usize] {
        match op {
            Op::Up => &self.up,
            Op::Down => &self.down,
            Op::BarUp => &self.bar_up,
            Op::BarDown => &self.bar_down,
        }
    }

    /// The table of `op` as rows.
    pub fn table(&self, op: Op) -> Vec<Vec<usize>> {
        self.flat(op).chunks(self.order).map(|row| row.to_vec()).collect()
    }

    /// Both bar tables, derived by inverting `S`.
    pub fn bar_tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        (self.table(Op::BarUp), self.table(Op::BarDown))
    }

    /// `S(x, y) = (y ↓ x, x ↑ y)`.
    pub fn switch(&self, x: usize, y: usize) -> (usize, usize) {
        (self.down(y, x), self.up(x, y))
    }

    /// `S⁻¹(a, b) = (b ↑̄ a, a ↓̄ b)`.
    pub fn switch_inverse(&self, a: usize, b: usize) -> (usize, usize) {
        (self.bar_up(b, a), self.bar_down(a, b))
    }

    /// Inverse of the column map `x ↦ x op b`, when that map is a bijection.
    ///
    /// Always present for `Up` and `Down`.
    pub fn column_inverse(&self, op: Op, b: usize) -> Option<Vec<usize>> {
        column_inverse(self.order, self.flat(op), b)
    }

    /// The down operation is first-argument projection.
    pub fn is_quandle(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.down(a, b) == a))
    }

    pub fn satisfies_r(&self) -> bool {
        self.r_violation().is_none()
    }

    /// First violated identity of the `R` schema, if any.
    pub fn r_violation(&self) -> Option<RViolation> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let Some((identity, left, right)) = self.r_check(a, b, c) {
                        return Some(RViolation { identity, triple: (a, b, c), left, right });
                    }
                }
            }
        }
        None
    }

    /// First identity of `R_{a,b,c}` that fails at these elements.
    pub fn r_check(&self, a: usize, b: usize, c: usize) -> Option<(RIdentity, usize, usize)> {
        RIdentity::ALL.into_iter().find_map(|identity| {
            let (outer, inner) = identity.ops();
            let left = self.apply(outer, a, self.apply(inner, b, c));
            let right = self.apply(outer, a, b);
            (left != right).then_some((identity, left, right))
        })
    }

    /// Row-major encoding `(up, down)` used to order enumerations.
    pub fn encoding(&self) -> (&[usize], &[usize]) {
        (&self.up, &self.down)
    }
}

/// All biquandle homomorphisms `X → Y`, as images of `0..|X|`, in
/// lexicographic order.
///
/// Every returned map is also checked against both bar tables.
pub fn homomorphisms(x: &FiniteBiquandle, y: &FiniteBiquandle) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    extend_hom(x, y, &mut map, 0, &mut out);
    for f in &out {
        for a in 0..n {
            for b in 0..n {
                assert_eq!(f[x.bar_up(a, b)], y.bar_up(f[a], f[b]), "hom does not preserve bar-up");
                assert_eq!(
                    f[x.bar_down(a, b)],
                    y.bar_down(f[a], f[b]),
                    "hom does not preserve bar-down"
                );
            }
        }
    }
    out
}

fn extend_hom(
    x: &FiniteBiquandle,
    y: &FiniteBiquandle,
    map: &mut Vec<usize>,
    next: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let n = x.order();
    if next == n {
        out.push(map.clone());
        return;
    }
    for image in 0..y.order() {
        map[next] = image;
        if hom_consistent(x, y, map, next) {
            extend_hom(x, y, map, next + 1, out);
        }
    }
    map[next] = usize::MAX;
}

/// Check every equation whose elements are all among `0..=last`.
fn hom_consistent(x: &FiniteBiquandle, y: &FiniteBiquandle, map: &[usize], last: usize) -> bool {
    for a in 0..=last {
        for b in 0..=last {
            if a != last && b != last {
                continue;
            }
            for op in [Op::Up, Op::Down] {
                let ab = x.apply(op, a, b);
                if ab <= last && map[ab] != y.apply(op, map[a], map[b]) {
                    return false;
                }
            }
        }
    }
    // Products landing on `last` from earlier pairs.
    for a in 0..last {
        for b in 0..last {
            for op in [Op::Up, Op::Down] {
                if x.apply(op, a, b) == last && map[last] != y.apply(op, map[a], map[b]) {
                    return false;
                }
            }
        }
    }
    true
}
