//! Coloring counts of diagrams and presentations into finite biquandles.
//!
//! A coloring assigns an element to every semiarc so that every crossing
//! relation holds. In topological mode the `R` identities must also hold
//! for every ordered triple of colors that occur.
//!
//! [`enumerate_colorings`] chooses a static list of seed semiarcs, tries
//! every assignment of the seeds and derives the remaining semiarcs through
//! the crossings, rejecting conflicts. The brute-force [`oracle_colorings`]
//! tries every assignment of every semiarc and exists to check it.

use core::fmt;
use core::ops::ControlFlow;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{enumerate_biquandles, FiniteBiquandle, MAX_ENUMERATION_ORDER};
use crate::diagram::Diagram;
use crate::op::{Op, Sign};
use crate::presentation::{Kind, Presentation};
use crate::terms::{Compiled, EvalError, Term};

/// Counting mode: crossing relations only, or with the `R` identities.
pub type Mode = Kind;

/// Colors of a diagram's semiarcs, in the diagram's semiarc order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn to_map(&self, d: &Diagram) -> BTreeMap<String, usize> {
        d.semiarcs().iter().cloned().zip(self.colors.iter().copied()).collect()
    }
}

/// The first target on which two diagrams have different counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    /// Position of the target in the list passed to [`distinguish`].
    pub target: usize,
    pub counts: (u64, u64),
}

/// Outcome of [`separate_terms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermSeparation {
    /// A homomorphism out of the presented biquandle, given by the images of
    /// the generators, sends the two terms to different elements.
    Separated { target: FiniteBiquandle, assignment: Vec<usize>, values: (usize, usize) },
    /// The terms are equal in the presented biquandle.
    ProvedEqual,
    /// No separating coloring within the search bound.
    Unknown,
}

impl fmt::Display for TermSeparation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermSeparation::Separated { target, assignment, values } => write!(
                f,
                "separated by a biquandle of order {} under {:?}: {} vs {}",
                target.order(),
                assignment,
                values.0,
                values.1
            ),
            TermSeparation::ProvedEqual => f.write_str("proved equal"),
            TermSeparation::Unknown => f.write_str("unknown"),
        }
    }
}

/// A crossing with semiarcs replaced by indices.
#[derive(Clone, Copy, Debug)]
struct Slots {
    sign: Sign,
    under_in: usize,
    over_in: usize,
    under_out: usize,
    over_out: usize,
}

fn slots(d: &Diagram) -> Vec<Slots> {
    let idx = |s: &str| d.index_of(s).expect("crossing semiarcs are declared");
    d.crossings()
        .iter()
        .map(|c| Slots {
            sign: c.sign,
            under_in: idx(&c.under_in),
            over_in: idx(&c.over_in),
            under_out: idx(&c.under_out),
            over_out: idx(&c.over_out),
        })
        .collect()
}

/// Ops of a crossing: `(under-strand op, over-strand op)`.
fn ops(sign: Sign) -> (Op, Op) {
    match sign {
        Sign::Pos => (Op::Up, Op::Down),
        Sign::Neg => (Op::BarUp, Op::BarDown),
    }
}

fn crossing_holds(c: &Slots, colors: &[usize], b: &FiniteBiquandle) -> bool {
    let (up, down) = ops(c.sign);
    let (u, o) = (colors[c.under_in], colors[c.over_in]);
    b.apply(up, u, o) == colors[c.under_out] && b.apply(down, o, u) == colors[c.over_out]
}

/// `ok[(x·n + y)·n + z]`: the `R` identities hold at `(x, y, z)`.
fn r_table(b: &FiniteBiquandle) -> Vec<bool> {
    let n = b.order();
    let mut ok = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                ok.push(b.r_check(x, y, z).is_none());
            }
        }
    }
    ok
}

/// The `R` identities hold on every triple drawn from the used colors.
fn r_holds(colors: &[usize], n: usize, r_ok: &[bool]) -> bool {
    let mut used = vec![false; n];
    for &c in colors {
        used[c] = true;
    }
    let set: Vec<usize> = (0..n).filter(|&c| used[c]).collect();
    set.iter().all(|&x| set.iter().all(|&y| set.iter().all(|&z| r_ok[(x * n + y) * n + z])))
}

/// Brute force: every assignment of every semiarc, in lexicographic order.
pub fn oracle_colorings(d: &Diagram, b: &FiniteBiquandle, mode: Mode) -> Vec<Coloring> {
    let mut out = Vec::new();
    oracle_each(d, b, mode, |c| out.push(Coloring { colors: c.to_vec() }));
    out
}

pub fn oracle_count(d: &Diagram, b: &FiniteBiquandle, mode: Mode) -> u64 {
    let mut count = 0;
    oracle_each(d, b, mode, |_| count += 1);
    count
}

fn oracle_each(d: &Diagram, b: &FiniteBiquandle, mode: Mode, mut visit: impl FnMut(&[usize])) {
    let crossings = slots(d);
    let n = b.order();
    let r_ok = (mode == Kind::Topological).then(|| r_table(b));
    let k = d.semiarcs().len();
    let mut colors = vec![0usize; k];
    loop {
        if crossings.iter().all(|c| crossing_holds(c, &colors, b))
            && r_ok.as_ref().is_none_or(|ok| r_holds(&colors, n, ok))
        {
            visit(&colors);
        }
        // Odometer, last semiarc fastest, so visits are lexicographic.
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            colors[pos] += 1;
            if colors[pos] < n {
                break;
            }
            colors[pos] = 0;
        }
    }
}

/// How a crossing determines its unknown semiarcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    /// Both incoming known: apply the crossing.
    Forward,
    /// Both outgoing known: apply the inverse switch.
    Backward,
    /// Over-in and under-out known: invert the under column, then go forward.
    FromUnderOut,
    /// Under-in and over-out known: invert the over column, then go forward.
    FromOverOut,
}

#[derive(Clone, Copy, Debug)]
enum Step {
    Seed(usize),
    Derive(usize, Rule),
}

/// The static propagation plan: seeds are taken in semiarc order whenever
/// no crossing can determine a new semiarc.
fn plan(k: usize, crossings: &[Slots]) -> Vec<Step> {
    let mut known = vec![false; k];
    let mut steps = Vec::new();
    let mut next_seed = 0;
    loop {
        let mut progressed = false;
        for (ci, c) in crossings.iter().enumerate() {
            let all = [c.under_in, c.over_in, c.under_out, c.over_out];
            if all.iter().all(|&s| known[s]) {
                continue;
            }
            let rule = if known[c.under_in] && known[c.over_in] {
                Rule::Forward
            } else if known[c.under_out] && known[c.over_out] {
                Rule::Backward
            } else if known[c.over_in] && known[c.under_out] {
                Rule::FromUnderOut
            } else if known[c.under_in] && known[c.over_out] {
                Rule::FromOverOut
            } else {
                continue;
            };
            steps.push(Step::Derive(ci, rule));
            for s in all {
                known[s] = true;
            }
            progressed = true;
        }
        if progressed {
            continue;
        }
        while next_seed < k && known[next_seed] {
            next_seed += 1;
        }
        if next_seed == k {
            return steps;
        }
        known[next_seed] = true;
        steps.push(Step::Seed(next_seed));
    }
}

/// Column inverses of all four operations: `inv[op][col * n + y] = x` with
/// `x op col = y`.
struct Inverses {
    n: usize,
    tables: [Vec<usize>; 4],
}

impl Inverses {
    fn new(b: &FiniteBiquandle) -> Self {
        let n = b.order();
        let table = |op: Op| {
            let mut t = vec![0; n * n];
            for col in 0..n {
                let inv = b.column_inverse(op, col).expect("biquandle columns are bijective");
                t[col * n..(col + 1) * n].copy_from_slice(&inv);
            }
            t
        };
        Inverses { n, tables: [table(Op::Up), table(Op::Down), table(Op::BarUp), table(Op::BarDown)] }
    }

    fn get(&self, op: Op, col: usize, y: usize) -> usize {
        let i = match op {
            Op::Up => 0,
            Op::Down => 1,
            Op::BarUp => 2,
            Op::BarDown => 3,
        };
        self.tables[i][col * self.n + y]
    }
}

/// Run the plan for one seed assignment; `false` on conflict.
fn propagate(
    steps: &[Step],
    crossings: &[Slots],
    seeds: &[usize],
    b: &FiniteBiquandle,
    inv: &Inverses,
    colors: &mut [usize],
) -> bool {
    const UNSET: usize = usize::MAX;
    colors.fill(UNSET);
    let mut seed = seeds.iter();
    let set = |colors: &mut [usize], s: usize, v: usize| {
        if colors[s] == UNSET {
            colors[s] = v;
            true
        } else {
            colors[s] == v
        }
    };
    for step in steps {
        match *step {
            Step::Seed(s) => colors[s] = *seed.next().expect("one value per seed"),
            Step::Derive(ci, rule) => {
                let c = &crossings[ci];
                let (up, down) = ops(c.sign);
                let (u, o) = match rule {
                    Rule::Forward => (colors[c.under_in], colors[c.over_in]),
                    Rule::Backward => {
                        let (uo, oo) = (colors[c.under_out], colors[c.over_out]);
                        // S(u, o) = (o', u') at a positive crossing and
                        // S(u', o') = (o, u) at a negative one.
                        match c.sign {
                            Sign::Pos => b.switch_inverse(oo, uo),
                            Sign::Neg => {
                                let (o, u) = b.switch(uo, oo);
                                (u, o)
                            }
                        }
                    }
                    Rule::FromUnderOut => {
                        let o = colors[c.over_in];
                        (inv.get(up, o, colors[c.under_out]), o)
                    }
                    Rule::FromOverOut => {
                        let u = colors[c.under_in];
                        (u, inv.get(down, u, colors[c.over_out]))
                    }
                };
                if !(set(colors, c.under_in, u)
                    && set(colors, c.over_in, o)
                    && set(colors, c.under_out, b.apply(up, u, o))
                    && set(colors, c.over_out, b.apply(down, o, u)))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn propagate_each(d: &Diagram, b: &FiniteBiquandle, mode: Mode, mut visit: impl FnMut(&[usize])) {
    let crossings = slots(d);
    let n = b.order();
    let k = d.semiarcs().len();
    let steps = plan(k, &crossings);
    let seed_count = steps.iter().filter(|s| matches!(s, Step::Seed(_))).count();
    let inv = Inverses::new(b);
    let r_ok = (mode == Kind::Topological).then(|| r_table(b));
    let mut seeds = vec![0usize; seed_count];
    let mut colors = vec![0usize; k];
    loop {
        if propagate(&steps, &crossings, &seeds, b, &inv, &mut colors)
            && crossings.iter().all(|c| crossing_holds(c, &colors, b))
            && r_ok.as_ref().is_none_or(|ok| r_holds(&colors, n, ok))
        {
            visit(&colors);
        }
        let mut pos = seed_count;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            seeds[pos] += 1;
            if seeds[pos] < n {
                break;
            }
            seeds[pos] = 0;
        }
    }
}

/// Every coloring, sorted lexicographically by semiarc colors.
pub fn enumerate_colorings(d: &Diagram, b: &FiniteBiquandle, mode: Mode) -> Vec<Coloring> {
    let mut out = Vec::new();
    propagate_each(d, b, mode, |c| out.push(Coloring { colors: c.to_vec() }));
    out.sort();
    out
}

/// Number of colorings, by propagation.
pub fn count_colorings(d: &Diagram, b: &FiniteBiquandle, mode: Mode) -> u64 {
    let mut count = 0;
    propagate_each(d, b, mode, |_| count += 1);
    count
}

/// Number of seed semiarcs propagation assigns freely for `d`.
pub fn seed_count(d: &Diagram) -> usize {
    plan(d.semiarcs().len(), &slots(d)).iter().filter(|s| matches!(s, Step::Seed(_))).count()
}

/// Visit every assignment of the generators satisfying the relations (and
/// the `R` identities for the topological kind), in lexicographic order.
pub fn for_each_hom<B>(
    p: &Presentation,
    b: &FiniteBiquandle,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let index = |g: &str| p.generators.iter().position(|h| h == g);
    // Each relation is checked once its last generator is assigned.
    let mut due: Vec<Vec<(Compiled, Compiled)>> = vec![Vec::new(); p.generators.len()];
    for r in &p.relations {
        let lhs = Compiled::new(&r.lhs, &index).expect("relation generators are declared");
        let rhs = Compiled::new(&r.rhs, &index).expect("relation generators are declared");
        let Some(last) = lhs.generators().chain(rhs.generators()).max() else { continue };
        due[last].push((lhs, rhs));
    }
    let r_ok = (p.kind == Kind::Topological).then(|| r_table(b));
    let mut search = HomSearch {
        b,
        due: &due,
        r_ok: r_ok.as_deref(),
        colors: vec![None; p.generators.len()],
        uses: vec![0; b.order()],
        stack: Vec::new(),
        visit: &mut visit,
    };
    match search.extend(0) {
        ControlFlow::Break(x) => Some(x),
        ControlFlow::Continue(()) => None,
    }
}

struct HomSearch<'a, F> {
    b: &'a FiniteBiquandle,
    due: &'a [Vec<(Compiled, Compiled)>],
    r_ok: Option<&'a [bool]>,
    colors: Vec<Option<usize>>,
    uses: Vec<usize>,
    stack: Vec<usize>,
    visit: &'a mut F,
}

impl<B, F: FnMut(&[usize]) -> ControlFlow<B>> HomSearch<'_, F> {
    fn extend(&mut self, k: usize) -> ControlFlow<B> {
        if k == self.colors.len() {
            let full: Vec<usize> = self.colors.iter().map(|c| c.expect("assigned")).collect();
            return (self.visit)(&full);
        }
        for x in 0..self.b.order() {
            self.colors[k] = Some(x);
            self.uses[x] += 1;
            if self.consistent(k, x) {
                self.extend(k + 1)?;
            }
            self.uses[x] -= 1;
        }
        self.colors[k] = None;
        ControlFlow::Continue(())
    }

    fn consistent(&mut self, k: usize, x: usize) -> bool {
        for (lhs, rhs) in &self.due[k] {
            let l = lhs.eval(&self.colors, self.b, &mut self.stack);
            let r = rhs.eval(&self.colors, self.b, &mut self.stack);
            if l != r {
                return false;
            }
        }
        match self.r_ok {
            // A color already in use adds no new triples.
            Some(ok) if self.uses[x] == 1 => {
                let n = self.b.order();
                let used: Vec<usize> = (0..n).filter(|&c| self.uses[c] > 0).collect();
                used.iter().all(|&y| {
                    used.iter().all(|&z| {
                        ok[(x * n + y) * n + z] && ok[(y * n + x) * n + z] && ok[(y * n + z) * n + x]
                    })
                })
            }
            _ => true,
        }
    }
}

/// Number of homomorphisms out of the presented biquandle into `b`.
pub fn hom_count_presentation(p: &Presentation, b: &FiniteBiquandle) -> u64 {
    let mut count = 0;
    for_each_hom::<()>(p, b, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// The first target (in list order) on which the counts of `d1` and `d2`
/// differ.
pub fn distinguish(d1: &Diagram, d2: &Diagram, targets: &[FiniteBiquandle], mode: Mode) -> Option<Separation> {
    targets.iter().enumerate().find_map(|(target, b)| {
        let counts = (count_colorings(d1, b, mode), count_colorings(d2, b, mode));
        (counts.0 != counts.1).then_some(Separation { target, counts })
    })
}

/// Decide whether `t1 = t2` in the biquandle presented by `p`, as far as
/// possible.
///
/// Syntactic equality, and for the topological kind equality of normal
/// forms, prove the terms equal. Otherwise every biquandle of order up to
/// `max_order` (capped at [`MAX_ENUMERATION_ORDER`]) is tried in canonical
/// order, with every homomorphism out of `p` in lexicographic order; the
/// first one separating the terms is returned. Equality is never claimed
/// from a failed search.
pub fn separate_terms(p: &Presentation, t1: &Term, t2: &Term, max_order: usize) -> Result<TermSeparation, EvalError> {
    for t in [t1, t2] {
        if let Some(g) = t.generators().into_iter().find(|g| !p.generators.iter().any(|h| h == g)) {
            return Err(EvalError::Unbound(g.into()));
        }
    }
    if t1 == t2 || (p.kind == Kind::Topological && t1.normalize() == t2.normalize()) {
        return Ok(TermSeparation::ProvedEqual);
    }
    let index = |g: &str| p.generators.iter().position(|h| h == g);
    let c1 = Compiled::new(t1, &index).expect("checked above");
    let c2 = Compiled::new(t2, &index).expect("checked above");
    let mut stack = Vec::new();
    for order in 1..=max_order.min(MAX_ENUMERATION_ORDER) {
        for target in enumerate_biquandles(order).expect("order within range") {
            let found = for_each_hom(p, &target, |colors| {
                let env: Vec<Option<usize>> = colors.iter().copied().map(Some).collect();
                let v1 = c1.eval(&env, &target, &mut stack).expect("total assignment");
                let v2 = c2.eval(&env, &target, &mut stack).expect("total assignment");
                if v1 != v2 {
                    ControlFlow::Break((colors.to_vec(), (v1, v2)))
                } else {
                    ControlFlow::Continue(())
                }
            });
            if let Some((assignment, values)) = found {
                return Ok(TermSeparation::Separated { target, assignment, values });
            }
        }
    }
    Ok(TermSeparation::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::presentation::{fundamental_presentation, topological_presentation};
    use crate::terms::parse_term;
    use proptest::prelude::*;

    const TREFOIL: &str = "+ 1 4 2 5\n+ 3 6 4 1\n+ 5 2 6 3\n";

    fn r3() -> FiniteBiquandle {
        FiniteBiquandle::from_fn(3, |a, b| (2 * b + 3 - a) % 3, |a, _| a).unwrap()
    }

    fn z5() -> FiniteBiquandle {
        FiniteBiquandle::from_fn(5, |a, b| (a + 4 * b) % 5, |a, _| (2 * a) % 5).unwrap()
    }

    #[test]
    fn trefoil_and_unknot_counts() {
        let trefoil = parse_pd(TREFOIL).unwrap();
        let unknot = parse_pd("O u").unwrap();
        for mode in [Kind::Fundamental, Kind::Topological] {
            assert_eq!(count_colorings(&trefoil, &r3(), mode), 9);
            assert_eq!(oracle_count(&trefoil, &r3(), mode), 9);
            assert_eq!(count_colorings(&unknot, &r3(), mode), 3);
        }
        assert_eq!(
            distinguish(&trefoil, &unknot, &[r3()], Kind::Fundamental),
            Some(Separation { target: 0, counts: (9, 3) })
        );
        assert_eq!(distinguish(&trefoil, &trefoil, &[r3(), z5()], Kind::Topological), None);
    }

    #[test]
    fn trefoil_colorings_are_classical_three_colorings() {
        let trefoil = parse_pd(TREFOIL).unwrap();
        let all = enumerate_colorings(&trefoil, &r3(), Kind::Fundamental);
        assert_eq!(all, oracle_colorings(&trefoil, &r3(), Kind::Fundamental));
        for c in &all {
            // Quandle colorings are constant along each over-arc: 1→2 and 4→5 etc.
            let m = c.to_map(&trefoil);
            assert_eq!(m["4"], m["5"]);
            assert_eq!(m["6"], m["1"]);
            assert_eq!(m["2"], m["3"]);
            let arcs = [m["1"], m["3"], m["5"]];
            let distinct = arcs.iter().collect::<alloc::collections::BTreeSet<_>>().len();
            assert!(distinct == 1 || distinct == 3);
        }
    }

    #[test]
    fn z5_topological_is_at_most_fundamental() {
        let trefoil = parse_pd(TREFOIL).unwrap();
        let f = oracle_count(&trefoil, &z5(), Kind::Fundamental);
        let t = oracle_count(&trefoil, &z5(), Kind::Topological);
        assert!(t <= f);
        assert_eq!(count_colorings(&trefoil, &z5(), Kind::Fundamental), f);
        assert_eq!(count_colorings(&trefoil, &z5(), Kind::Topological), t);
    }

    #[test]
    fn order_one_target_has_one_coloring() {
        let one = FiniteBiquandle::trivial(1);
        for d in [Diagram::braid_closure(3, &[1, -2, 1, 2]), parse_pd(TREFOIL).unwrap()] {
            assert_eq!(enumerate_colorings(&d, &one, Kind::Topological).len(), 1);
        }
    }

    #[test]
    fn presentation_counts() {
        for n in 1..=4 {
            let free = Presentation::free(&["a"], Kind::Fundamental);
            assert_eq!(hom_count_presentation(&free, &FiniteBiquandle::trivial(n)), n as u64);
        }
        assert_eq!(hom_count_presentation(&Presentation::free(&[], Kind::Topological), &r3()), 1);
        let trefoil = parse_pd(TREFOIL).unwrap();
        for b in [r3(), z5()] {
            for (pres, mode) in [
                (fundamental_presentation(&trefoil), Kind::Fundamental),
                (topological_presentation(&trefoil), Kind::Topological),
            ] {
                assert_eq!(hom_count_presentation(&pres, &b), count_colorings(&trefoil, &b, mode));
            }
        }
    }

    #[test]
    fn term_separation_examples() {
        let free = Presentation::free(&["a"], Kind::Fundamental);
        let a = parse_term("a").unwrap();
        let aa = parse_term("(a ^ a)").unwrap();
        match separate_terms(&free, &a, &aa, 3).unwrap() {
            TermSeparation::Separated { target, assignment, values } => {
                assert_eq!(target.order(), 2);
                assert_eq!(assignment, [0]);
                assert_eq!(values, (0, 1));
            }
            other => panic!("expected a separation, got {other:?}"),
        }
        let topo = Presentation::free(&["a", "b", "c"], Kind::Topological);
        let t1 = parse_term("(a ^ (b _ c))").unwrap();
        let t2 = parse_term("(a ^ b)").unwrap();
        assert_eq!(separate_terms(&topo, &t1, &t2, 3), Ok(TermSeparation::ProvedEqual));
        assert_eq!(separate_terms(&free, &aa, &aa, 3), Ok(TermSeparation::ProvedEqual));
        // (a ↑ a) ↑̄ a = a holds in every R-biquandle but is not a free identity.
        let back = parse_term("((a ^ a) ^- a)").unwrap();
        let topo_a = Presentation::free(&["a"], Kind::Topological);
        assert_eq!(separate_terms(&topo_a, &back, &a, 3), Ok(TermSeparation::ProvedEqual));
        assert!(separate_terms(&free, &a, &parse_term("z").unwrap(), 3).is_err());
    }

    #[test]
    fn unknown_is_reported_without_claiming_equality() {
        // The only biquandle of order 1 cannot tell these apart.
        let free = Presentation::free(&["a"], Kind::Fundamental);
        let t1 = parse_term("(a ^ (a _ a))").unwrap();
        let t2 = parse_term("(a ^ a)").unwrap();
        assert_eq!(separate_terms(&free, &t1, &t2, 1), Ok(TermSeparation::Unknown));
    }

    fn arb_braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
        (2usize..=4).prop_flat_map(|n| {
            let letter = (1..n as i32, any::<bool>()).prop_map(|(i, p)| if p { i } else { -i });
            (Just(n), prop::collection::vec(letter, 0..=4))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn propagation_matches_oracle((n, w) in arb_braid(), pick in 0usize..36) {
            let d = Diagram::braid_closure(n, &w);
            let targets = enumerate_biquandles(3).unwrap();
            let b = &targets[pick];
            for mode in [Kind::Fundamental, Kind::Topological] {
                prop_assert_eq!(enumerate_colorings(&d, b, mode), oracle_colorings(&d, b, mode));
            }
            let f = count_colorings(&d, b, Kind::Fundamental);
            let t = count_colorings(&d, b, Kind::Topological);
            prop_assert!(t <= f);
            if b.satisfies_r() {
                prop_assert_eq!(t, f);
            }
            prop_assert_eq!(hom_count_presentation(&fundamental_presentation(&d), b), f);
            prop_assert_eq!(hom_count_presentation(&topological_presentation(&d), b), t);
        }
    }
}
