//! The reproduction suite behind `biquandle verify-paper`.
//!
//! Each criterion is an exact check with a fixed random seed; the outcome
//! carries a one-line detail either way. Fixtures are read from a directory
//! or taken from the copies embedded at build time, and a fixture that fails
//! to load fails exactly the criteria that use it.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::time::{Duration, Instant};

use biquandle_core::algebra::check_axioms;
use biquandle_core::{
    count_colorings, distinguish, enumerate_biquandles, enumerate_colorings, fundamental_presentation,
    hom_count_presentation, homomorphisms, oracle_colorings, oracle_count, parse_pd, tietze_eliminate,
    tietze_eliminate_keeping, topological_presentation, validate_biquandle, Diagram, FiniteBiquandle, Letter, Mode,
    Op, Term, TopTriple, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formats::{biquandle_from_text, FormatError};

pub const DIAGRAM_FIXTURES: [&str; 9] =
    ["unknot", "unlink2", "kink_pos", "kink_neg", "trefoil", "trefoil_r1", "trefoil_r1_neg", "trefoil_r2", "l6n1"];
pub const TARGET_FIXTURES: [&str; 4] = ["shift_z3", "trivial_2", "r3", "z5"];

const EMBEDDED_DIAGRAMS: [&str; 9] = [
    include_str!("../../../fixtures/unknot.pd"),
    include_str!("../../../fixtures/unlink2.pd"),
    include_str!("../../../fixtures/kink_pos.pd"),
    include_str!("../../../fixtures/kink_neg.pd"),
    include_str!("../../../fixtures/trefoil.pd"),
    include_str!("../../../fixtures/trefoil_r1.pd"),
    include_str!("../../../fixtures/trefoil_r1_neg.pd"),
    include_str!("../../../fixtures/trefoil_r2.pd"),
    include_str!("../../../fixtures/l6n1.pd"),
];
const EMBEDDED_TARGETS: [&str; 4] = [
    include_str!("../../../fixtures/shift_z3.json"),
    include_str!("../../../fixtures/trivial_2.json"),
    include_str!("../../../fixtures/r3.json"),
    include_str!("../../../fixtures/z5.json"),
];

/// The fixture set, with per-file load errors kept as text.
pub struct Fixtures {
    diagrams: BTreeMap<&'static str, Result<Diagram, String>>,
    targets: BTreeMap<&'static str, Result<FiniteBiquandle, String>>,
}

impl Fixtures {
    pub fn embedded() -> Self {
        let diagrams = DIAGRAM_FIXTURES
            .iter()
            .zip(EMBEDDED_DIAGRAMS)
            .map(|(&name, text)| (name, parse_pd(text).map_err(|e| format!("{name}.pd: {e}"))))
            .collect();
        let targets = TARGET_FIXTURES
            .iter()
            .zip(EMBEDDED_TARGETS)
            .map(|(&name, text)| {
                let path = format!("{name}.json");
                (name, biquandle_from_text(text, Path::new(&path)).map_err(|e| e.to_string()))
            })
            .collect();
        Fixtures { diagrams, targets }
    }

    pub fn from_dir(dir: &Path) -> Self {
        let read = |file: String| {
            let path = dir.join(file);
            std::fs::read_to_string(&path)
                .map_err(|source| FormatError::Io { path: path.clone(), source }.to_string())
                .map(|text| (path, text))
        };
        let diagrams = DIAGRAM_FIXTURES
            .iter()
            .map(|&name| {
                let d = read(format!("{name}.pd"))
                    .and_then(|(path, text)| parse_pd(&text).map_err(|e| format!("{}: {e}", path.display())));
                (name, d)
            })
            .collect();
        let targets = TARGET_FIXTURES
            .iter()
            .map(|&name| {
                let b = read(format!("{name}.json"))
                    .and_then(|(path, text)| biquandle_from_text(&text, &path).map_err(|e| e.to_string()));
                (name, b)
            })
            .collect();
        Fixtures { diagrams, targets }
    }

    fn diagram(&self, name: &str) -> Result<&Diagram, String> {
        self.diagrams[name].as_ref().map_err(Clone::clone)
    }

    fn target(&self, name: &str) -> Result<&FiniteBiquandle, String> {
        self.targets[name].as_ref().map_err(Clone::clone)
    }
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub budget: Option<Duration>,
    check: fn(&Fixtures) -> Result<String, String>,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, name: "axiom-suite", budget: Some(Duration::from_secs(1)), check: axiom_suite },
    Criterion { id: 2, name: "bar-cancellation", budget: Some(Duration::from_secs(60)), check: bar_cancellation },
    Criterion { id: 3, name: "hom-bar-preservation", budget: None, check: hom_bar_preservation },
    Criterion { id: 4, name: "free-model-biquandle", budget: None, check: free_model_biquandle },
    Criterion { id: 5, name: "normal-form-soundness", budget: None, check: normal_form_soundness },
    Criterion { id: 6, name: "l6n1-reproduction", budget: Some(Duration::from_secs(60)), check: l6n1_reproduction },
    Criterion { id: 7, name: "counting-values", budget: Some(Duration::from_secs(60)), check: counting_values },
    Criterion { id: 8, name: "quotient-inequality", budget: None, check: quotient_inequality },
    Criterion { id: 9, name: "oracle-equivalence", budget: Some(Duration::from_secs(300)), check: oracle_equivalence },
];

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Criterion {
    pub fn run(&self, fixtures: &Fixtures) -> Outcome {
        let start = Instant::now();
        let result = (self.check)(fixtures);
        let elapsed = start.elapsed();
        let (passed, detail) = match (result, self.budget) {
            (Ok(_), Some(budget)) if elapsed > budget => {
                (false, format!("took {elapsed:.2?}, budget {budget:?}"))
            }
            (Ok(detail), _) => (true, detail),
            (Err(detail), _) => (false, detail),
        };
        Outcome { id: self.id, name: self.name, passed, detail, elapsed }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {} ({:.2?}): {}", self.id, self.name, self.elapsed, self.detail)
    }
}

pub fn run_all(fixtures: &Fixtures) -> Vec<Outcome> {
    CRITERIA.iter().map(|c| c.run(fixtures)).collect()
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn up_to(order: usize) -> Vec<FiniteBiquandle> {
    (1..=order).flat_map(|n| enumerate_biquandles(n).expect("order within the enumeration cap")).collect()
}

fn tables(b: &FiniteBiquandle) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (b.table(Op::Up), b.table(Op::Down))
}

// 1 ------------------------------------------------------------------------

fn axiom_suite(fx: &Fixtures) -> Result<String, String> {
    for name in ["shift_z3", "r3"] {
        let (up, down) = tables(fx.target(name)?);
        validate_biquandle(&up, &down).map_err(|e| format!("{name}: {e}"))?;
    }
    for n in 1..=5 {
        let t: Vec<Vec<usize>> = (0..n).map(|a| vec![a; n]).collect();
        validate_biquandle(&t, &t).map_err(|e| format!("trivial of order {n}: {e}"))?;
    }
    let (up, down) = tables(fx.target("r3")?);
    let n = up.len();
    let mut rejected = 0;
    for a in 0..n {
        for b in 0..n {
            for v in (0..n).filter(|&v| v != up[a][b]) {
                let mut bad = up.clone();
                bad[a][b] = v;
                let report = check_axioms(&bad, &down).map_err(|e| e.to_string())?;
                let first = report.failures.first().ok_or_else(|| format!("r3 with up[{a}][{b}] = {v} accepted"))?;
                ensure(!first.witness.is_empty(), || format!("{} has no witness", first.axiom))?;
                rejected += 1;
            }
        }
    }
    Ok(format!("shift Z3, trivial 1..5 and R3 valid; {rejected} corruptions of R3 rejected with witnesses"))
}

// 2 ------------------------------------------------------------------------

fn bar_cancellation(_: &Fixtures) -> Result<String, String> {
    let all = up_to(3);
    for (i, b) in all.iter().enumerate() {
        let n = b.order();
        for a in 0..n {
            for c in 0..n {
                let checks = [
                    b.bar_up(b.up(a, c), b.down(c, a)),
                    b.up(b.bar_up(a, c), b.bar_down(c, a)),
                    b.bar_down(b.down(a, c), b.up(c, a)),
                    b.down(b.bar_down(a, c), b.bar_up(c, a)),
                ];
                ensure(checks.iter().all(|&x| x == a), || format!("biquandle #{i} fails at ({a}, {c})"))?;
            }
        }
    }
    Ok(format!("four identities hold in all {} biquandles of order <= 3", all.len()))
}

// 3 ------------------------------------------------------------------------

fn hom_bar_preservation(_: &Fixtures) -> Result<String, String> {
    let all = up_to(3);
    let mut homs = 0;
    for x in &all {
        for y in &all {
            for f in homomorphisms(x, y) {
                for a in 0..x.order() {
                    for b in 0..x.order() {
                        ensure(
                            f[x.bar_up(a, b)] == y.bar_up(f[a], f[b]) && f[x.bar_down(a, b)] == y.bar_down(f[a], f[b]),
                            || format!("hom {f:?} breaks a bar operation at ({a}, {b})"),
                        )?;
                    }
                }
                homs += 1;
            }
        }
    }
    Ok(format!("{homs} homomorphisms between order <= 3 biquandles preserve both bars"))
}

// 4 ------------------------------------------------------------------------

const FREE_GENERATORS: [&str; 4] = ["a", "b", "c", "d"];

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| {
        let g = FREE_GENERATORS[rng.gen_range(0..FREE_GENERATORS.len())];
        if rng.gen_bool(0.5) {
            Letter::pos(g)
        } else {
            Letter::neg(g)
        }
    }))
}

fn random_triple(rng: &mut ChaCha8Rng) -> TopTriple {
    let g = FREE_GENERATORS[rng.gen_range(0..FREE_GENERATORS.len())];
    let (up, down) = (random_word(rng, 4), random_word(rng, 4));
    TopTriple::new(g, up, down)
}

/// The first failed axiom of the free model at `(a, b, c)`, if any.
fn free_axiom_failure(a: &TopTriple, b: &TopTriple, c: &TopTriple) -> Option<&'static str> {
    let switch = |x: &TopTriple, y: &TopTriple| (y.top_down(x), x.top_up(y));
    let switch_inverse = |p: &TopTriple, q: &TopTriple| {
        let y = p.top_bar_down(q);
        (q.top_bar_up(&y), y)
    };
    let (p, q) = switch(a, b);
    let (x, y) = switch_inverse(a, b);
    let fa = a.top_bar_up(a);
    let ga = a.top_bar_down(a);
    let checks: [(&str, bool); 9] = [
        ("up columns", a.top_up(b).top_bar_up(b) == *a && a.top_bar_up(b).top_up(b) == *a),
        ("down columns", a.top_down(b).top_bar_down(b) == *a && a.top_bar_down(b).top_down(b) == *a),
        ("S then S^-1", switch_inverse(&p, &q) == (a.clone(), b.clone())),
        ("S^-1 then S", switch(&x, &y) == (a.clone(), b.clone())),
        ("up kink", a.top_down(&fa) == fa),
        ("down kink", a.top_up(&ga) == ga),
        ("up interchange", a.top_up(b).top_up(c) == a.top_up(&c.top_down(b)).top_up(&b.top_up(c))),
        (
            "rule of five",
            a.top_down(b).top_up(&c.top_down(&b.top_up(a))) == a.top_up(c).top_down(&b.top_up(&c.top_down(a))),
        ),
        ("down interchange", a.top_down(b).top_down(c) == a.top_down(&c.top_up(b)).top_down(&b.top_down(c))),
    ];
    checks.iter().find(|(_, ok)| !ok).map(|(name, _)| *name)
}

fn words(gens: &[&str], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for w in &frontier {
            for g in gens {
                for l in [Letter::pos(*g), Letter::neg(*g)] {
                    let v = w.concat(&Word::letter(l));
                    if v.len() > w.len() {
                        next.insert(v);
                    }
                }
            }
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn universe(max_len: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<TopTriple> {
    let gens = ["a", "b"];
    let ws = words(&gens, max_len);
    let mut out = BTreeSet::new();
    for g in gens {
        for u in &ws {
            for d in &ws {
                if keep(u.len(), d.len()) {
                    out.insert(TopTriple::new(g, u.clone(), d.clone()));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn free_model_biquandle(_: &Fixtures) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1000 {
        let (a, b, c) = (random_triple(&mut rng), random_triple(&mut rng), random_triple(&mut rng));
        if let Some(axiom) = free_axiom_failure(&a, &b, &c) {
            return Err(format!("instance {i}: {axiom} fails at ({a}; {b}; {c})"));
        }
    }
    let pairs = universe(2, |_, _| true);
    for a in &pairs {
        for b in &pairs {
            ensure(
                a.top_up(b).top_bar_up(b) == *a
                    && a.top_bar_up(b).top_up(b) == *a
                    && a.top_down(b).top_bar_down(b) == *a
                    && a.top_bar_down(b).top_down(b) == *a,
                || format!("cancellation fails at ({a}; {b})"),
            )?;
        }
    }
    let triples = universe(2, |u, d| u + d <= 2);
    for a in &triples {
        for b in &triples {
            for c in &triples {
                for up in [Op::Up, Op::BarUp] {
                    for down in [Op::Down, Op::BarDown] {
                        ensure(a.apply(up, b).apply(down, c) == a.apply(down, c).apply(up, b), || {
                            format!("{up} and {down} do not commute at ({a}; {b}; {c})")
                        })?;
                        ensure(
                            a.apply(up, &b.apply(down, c)) == a.apply(up, b)
                                && a.apply(down, &b.apply(up, c)) == a.apply(down, b),
                            || format!("operand independence fails at ({a}; {b}; {c})"),
                        )?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "1000 random instances satisfy axioms 1-3; identities exhaustive over {} and {} triples",
        pairs.len(),
        triples.len()
    ))
}

// 5 ------------------------------------------------------------------------

fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> Term {
    if depth == 0 || rng.gen_bool(0.3) {
        return Term::gen(["a", "b", "c"][rng.gen_range(0..3)]);
    }
    let op = Op::ALL[rng.gen_range(0..4)];
    Term::app(op, random_term(rng, depth - 1), random_term(rng, depth - 1))
}

fn normal_form_soundness(_: &Fixtures) -> Result<String, String> {
    let targets: Vec<_> = up_to(3).into_iter().filter(FiniteBiquandle::satisfies_r).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let terms: Vec<Term> = (0..500).map(|_| random_term(&mut rng, 5)).collect();
    let mut evaluations = 0u64;
    for t in &terms {
        let nf = t.normalize();
        for b in &targets {
            let n = b.order();
            for code in 0..n * n * n {
                let env: BTreeMap<String, usize> =
                    [("a", code % n), ("b", code / n % n), ("c", code / (n * n))].map(|(g, v)| (g.into(), v)).into();
                let (x, y) = (t.eval(&env, b), nf.eval(&env, b));
                ensure(x == y, || format!("{t} vs {nf} in a biquandle of order {n} under {env:?}"))?;
                evaluations += 1;
            }
        }
    }
    Ok(format!("500 terms over {} targets, {evaluations} evaluations agree", targets.len()))
}

// 6 ------------------------------------------------------------------------

const L6N1_RELATIONS: [&str; 12] = [
    "(l ^ a) = i",
    "(a _ l) = b",
    "(f ^ k) = g",
    "(k _ f) = l",
    "(g ^ d) = h",
    "(d _ g) = a",
    "(c ^ j) = d",
    "(j _ c) = k",
    "(i ^ h) = j",
    "(h _ i) = e",
    "(b ^ e) = c",
    "(e _ b) = f",
];

const L6N1_CYCLIC: [&str; 3] = [
    "((((b ^ f) ^ l) _ f) _ l) = b",
    "((((f ^ l) ^ b) _ l) _ b) = f",
    "((((l ^ b) ^ f) _ b) _ f) = l",
];

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn l6n1_reproduction(fx: &Fixtures) -> Result<String, String> {
    let d = fx.diagram("l6n1")?;
    let fundamental = fundamental_presentation(d);
    let got: Vec<String> = fundamental.relations.iter().map(|r| r.to_string()).collect();
    ensure(got == L6N1_RELATIONS, || format!("fundamental relations differ: {got:?}"))?;

    let topological = topological_presentation(d);
    let top = tietze_eliminate_keeping(&topological, &["b", "f", "l"]);
    let top_gens = sorted(top.generators.clone());
    let top_rels = sorted(top.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    ensure(top_gens == ["b", "f", "l"] && top_rels == sorted(L6N1_CYCLIC.to_vec()), || {
        format!("topological elimination gives {top_gens:?} with {top_rels:?}")
    })?;

    let free = tietze_eliminate(&fundamental);
    let kept = tietze_eliminate_keeping(&fundamental, &["b", "f", "l"]);
    for b in up_to(3) {
        for (full, reduced) in [(&fundamental, &free), (&fundamental, &kept), (&topological, &top)] {
            let (x, y) = (hom_count_presentation(full, &b), hom_count_presentation(reduced, &b));
            ensure(x == y, || format!("hom count {x} became {y} after elimination"))?;
        }
    }

    let kept_gens = sorted(kept.generators.clone());
    ensure(kept_gens == ["b", "f", "l"], || {
        format!(
            "fundamental elimination reaches {:?} freely and {kept_gens:?} when keeping b, f, l; \
             topological clause and hom counts hold",
            sorted(free.generators.clone())
        )
    })?;
    Ok("12 relations, {b,f,l} in both kinds, cyclic relations, hom counts preserved".into())
}

// 7 ------------------------------------------------------------------------

fn counting_values(fx: &Fixtures) -> Result<String, String> {
    let r3 = fx.target("r3")?;
    let trefoil = fx.diagram("trefoil")?;
    let unknot = fx.diagram("unknot")?;
    for mode in [Mode::Fundamental, Mode::Topological] {
        for (name, d, want) in [("trefoil", trefoil, 9), ("unknot", unknot, 3)] {
            let (fast, slow) = (count_colorings(d, r3, mode), oracle_count(d, r3, mode));
            ensure(fast == want && slow == want, || {
                format!("{name}/R3 {mode}: propagation {fast}, oracle {slow}, expected {want}")
            })?;
        }
        ensure(distinguish(trefoil, unknot, std::slice::from_ref(r3), mode).is_some(), || {
            format!("trefoil and unknot not distinguished ({mode})")
        })?;
    }
    let targets = up_to(3);
    for variant in ["trefoil_r1", "trefoil_r1_neg", "trefoil_r2"] {
        let v = fx.diagram(variant)?;
        for mode in [Mode::Fundamental, Mode::Topological] {
            if let Some(sep) = distinguish(trefoil, v, &targets, mode) {
                return Err(format!("{variant} separated from trefoil by target #{} ({mode}): {:?}", sep.target, sep.counts));
            }
        }
    }
    Ok(format!("9 and 3 by both methods; trefoil variants agree on all {} targets", targets.len()))
}

// 8 ------------------------------------------------------------------------

fn quotient_inequality(fx: &Fixtures) -> Result<String, String> {
    let z5 = fx.target("z5")?;
    let (up, down) = tables(z5);
    validate_biquandle(&up, &down).map_err(|e| format!("z5: {e}"))?;
    let mut targets = up_to(3);
    targets.push(z5.clone());
    let mut strict = Vec::new();
    for name in DIAGRAM_FIXTURES {
        let d = fx.diagram(name)?;
        for (i, b) in targets.iter().enumerate() {
            let (f, t) = (count_colorings(d, b, Mode::Fundamental), count_colorings(d, b, Mode::Topological));
            ensure(t <= f, || format!("{name} target #{i}: topological {t} > fundamental {f}"))?;
            ensure(!b.satisfies_r() || t == f, || format!("{name} target #{i}: {t} != {f} on an R target"))?;
            if t < f {
                strict.push(format!("{name}#{i} ({t} < {f})"));
            }
        }
    }
    let example = strict.first().cloned().unwrap_or_else(|| "none at this scale".into());
    Ok(format!("{} strict pairs, e.g. {example}", strict.len()))
}

// 9 ------------------------------------------------------------------------

/// Closed braids with at most twelve semiarcs.
pub fn oracle_braids() -> Vec<Diagram> {
    let words: [(usize, &[i32]); 6] = [
        (2, &[1, 1, 1]),
        (3, &[1, -2, 1, -2]),
        (3, &[1, 1, 2, 2]),
        (2, &[1, 1, 1, 1, 1]),
        (3, &[1, 2, 1, 2, 1, 2]),
        (4, &[1, 2, 3, -1, 2, -3]),
    ];
    words.iter().map(|(s, w)| Diagram::braid_closure(*s, w)).collect()
}

fn oracle_equivalence(fx: &Fixtures) -> Result<String, String> {
    let mut diagrams = Vec::new();
    for name in DIAGRAM_FIXTURES {
        diagrams.push(fx.diagram(name)?.clone());
    }
    diagrams.extend(oracle_braids());
    diagrams.retain(|d| d.semiarcs().len() <= 12);
    let targets = enumerate_biquandles(3).expect("order 3 is enumerable");
    for d in &diagrams {
        for b in &targets {
            for mode in [Mode::Fundamental, Mode::Topological] {
                ensure(enumerate_colorings(d, b, mode) == oracle_colorings(d, b, mode), || {
                    format!("propagation and brute force differ ({mode}) on\n{}", d.to_text())
                })?;
            }
        }
    }
    Ok(format!("{} diagrams x {} order-3 targets x 2 modes", diagrams.len(), targets.len()))
}
