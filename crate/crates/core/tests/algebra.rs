//! Axiom checking, bar operations, homomorphisms and the operand-independence
//! identities, each against an oracle computed directly from the tables.

use std::collections::BTreeMap;

use biquandle_core::algebra::check_axioms;
use biquandle_core::{
    enumerate_biquandles, homomorphisms, materialize_r, validate_biquandle, Axiom, AxiomFailure, FiniteBiquandle, Op,
};

fn shift3() -> FiniteBiquandle {
    FiniteBiquandle::from_fn(3, |a, _| (a + 1) % 3, |a, _| (a + 2) % 3).unwrap()
}

fn r3_tables() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let up = (0..3).map(|a| (0..3).map(|b| (2 * b + 3 - a) % 3).collect()).collect();
    let down = (0..3).map(|a| vec![a; 3]).collect();
    (up, down)
}

fn up_to(order: usize) -> Vec<FiniteBiquandle> {
    (1..=order).flat_map(|n| enumerate_biquandles(n).unwrap()).collect()
}

/// Re-evaluate a reported failure on the raw tables.
fn witness_is_genuine(up: &[Vec<usize>], down: &[Vec<usize>], f: &AxiomFailure) -> bool {
    let n = up.len();
    let u = |a: usize, b: usize| up[a][b];
    let d = |a: usize, b: usize| down[a][b];
    let w = &f.witness;
    match f.axiom {
        Axiom::UpBijective => w[1] != w[2] && u(w[1], w[0]) == u(w[2], w[0]),
        Axiom::DownBijective => w[1] != w[2] && d(w[1], w[0]) == d(w[2], w[0]),
        Axiom::SwitchBijective => {
            (w[0], w[1]) != (w[2], w[3]) && (d(w[1], w[0]), u(w[0], w[1])) == (d(w[3], w[2]), u(w[2], w[3]))
        }
        Axiom::UpKink => {
            let a = w[0];
            let xs: Vec<_> = (0..n).filter(|&x| u(x, a) == a).collect();
            xs.len() == 1 && d(a, xs[0]) != xs[0]
        }
        Axiom::DownKink => {
            let a = w[0];
            let ys: Vec<_> = (0..n).filter(|&y| d(y, a) == a).collect();
            ys.len() == 1 && u(a, ys[0]) != ys[0]
        }
        Axiom::UpInterchange => {
            let (a, b, c) = (w[0], w[1], w[2]);
            u(u(a, b), c) != u(u(a, d(c, b)), u(b, c))
        }
        Axiom::RuleOfFive => {
            let (a, b, c) = (w[0], w[1], w[2]);
            u(d(a, b), d(c, u(b, a))) != d(u(a, c), u(b, d(c, a)))
        }
        Axiom::DownInterchange => {
            let (a, b, c) = (w[0], w[1], w[2]);
            d(d(a, b), c) != d(d(a, u(c, b)), d(b, c))
        }
    }
}

#[test]
fn standard_examples_validate() {
    let s = shift3();
    let (up, down) = (s.table(Op::Up), s.table(Op::Down));
    assert!(validate_biquandle(&up, &down).is_ok());
    for n in 1..=5 {
        let t: Vec<Vec<usize>> = (0..n).map(|a| vec![a; n]).collect();
        assert!(validate_biquandle(&t, &t).is_ok(), "trivial of order {n}");
    }
    let (up, down) = r3_tables();
    let r3 = validate_biquandle(&up, &down).unwrap();
    assert!(r3.is_quandle() && r3.satisfies_r());
}

#[test]
fn every_single_entry_corruption_of_r3_is_rejected_with_a_genuine_witness() {
    let (up, down) = r3_tables();
    let mut cases = 0;
    for a in 0..3 {
        for b in 0..3 {
            for v in (0..3).filter(|&v| v != up[a][b]) {
                let mut bad = up.clone();
                bad[a][b] = v;
                let report = check_axioms(&bad, &down).unwrap();
                assert!(!report.passed, "corruption ({a},{b}) -> {v} accepted");
                for f in &report.failures {
                    assert!(witness_is_genuine(&bad, &down, f), "bogus witness {f}");
                }
                assert!(validate_biquandle(&bad, &down).is_err());
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 18);
}

#[test]
fn enumeration_contains_the_standard_examples() {
    let three = enumerate_biquandles(3).unwrap();
    let (up, down) = r3_tables();
    let r3 = validate_biquandle(&up, &down).unwrap();
    assert!(three.contains(&shift3()));
    assert!(three.contains(&r3));
    assert!(three.contains(&FiniteBiquandle::trivial(3)));
}

/// Bar tables by searching for the preimage of every pair under `S`.
fn bars_by_search(b: &FiniteBiquandle) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = b.order();
    let mut bar_up = vec![vec![usize::MAX; n]; n];
    let mut bar_down = vec![vec![usize::MAX; n]; n];
    for p in 0..n {
        for q in 0..n {
            let pre: Vec<_> =
                (0..n * n).map(|c| (c / n, c % n)).filter(|&(x, y)| (b.down(y, x), b.up(x, y)) == (p, q)).collect();
            assert_eq!(pre.len(), 1);
            let (x, y) = pre[0];
            bar_up[q][p] = x;
            bar_down[p][q] = y;
        }
    }
    (bar_up, bar_down)
}

#[test]
fn bar_tables_match_the_inverse_switch() {
    for b in up_to(3) {
        let (bu, bd) = bars_by_search(&b);
        assert_eq!(b.table(Op::BarUp), bu);
        assert_eq!(b.table(Op::BarDown), bd);
    }
}

#[test]
fn bar_columns_are_bijective_through_order_four() {
    for b in up_to(4) {
        for op in Op::ALL {
            for col in 0..b.order() {
                assert!(b.column_inverse(op, col).is_some(), "{op} column {col}");
            }
        }
    }
}

#[test]
fn cancellation_identities_hold_in_every_small_biquandle() {
    for b in up_to(3) {
        let n = b.order();
        for a in 0..n {
            for c in 0..n {
                assert_eq!(b.bar_up(b.up(a, c), b.down(c, a)), a);
                assert_eq!(b.up(b.bar_up(a, c), b.bar_down(c, a)), a);
                assert_eq!(b.bar_down(b.down(a, c), b.up(c, a)), a);
                assert_eq!(b.down(b.bar_down(a, c), b.bar_up(c, a)), a);
            }
        }
    }
}

/// Every map `x → y` preserving up and down, by exhaustive search.
fn homs_by_search(x: &FiniteBiquandle, y: &FiniteBiquandle) -> Vec<Vec<usize>> {
    let (m, n) = (x.order(), y.order());
    let mut out = Vec::new();
    for code in 0..n.pow(m as u32) {
        let f: Vec<usize> = (0..m).map(|i| code / n.pow((m - 1 - i) as u32) % n).collect();
        let ok = (0..m).all(|a| {
            (0..m).all(|b| f[x.up(a, b)] == y.up(f[a], f[b]) && f[x.down(a, b)] == y.down(f[a], f[b]))
        });
        if ok {
            out.push(f);
        }
    }
    out
}

#[test]
fn homomorphisms_match_search_and_preserve_bars() {
    let all = up_to(3);
    let mut total = 0;
    for x in &all {
        for y in &all {
            let homs = homomorphisms(x, y);
            assert_eq!(homs, homs_by_search(x, y));
            for f in &homs {
                for a in 0..x.order() {
                    for b in 0..x.order() {
                        assert_eq!(f[x.bar_up(a, b)], y.bar_up(f[a], f[b]));
                        assert_eq!(f[x.bar_down(a, b)], y.bar_down(f[a], f[b]));
                    }
                }
            }
            total += homs.len();
        }
    }
    assert!(total > all.len());
}

#[test]
fn consequences_of_the_independence_identities() {
    for b in up_to(4).into_iter().filter(FiniteBiquandle::satisfies_r) {
        let n = b.order();
        for a in 0..n {
            for x in 0..n {
                assert_eq!(b.bar_up(b.up(a, x), x), a);
                assert_eq!(b.up(b.bar_up(a, x), x), a);
                assert_eq!(b.bar_down(b.down(a, x), x), a);
                assert_eq!(b.down(b.bar_down(a, x), x), a);
                for c in 0..n {
                    for up in [Op::Up, Op::BarUp] {
                        for down in [Op::Down, Op::BarDown] {
                            assert_eq!(b.apply(down, b.apply(up, a, x), c), b.apply(up, b.apply(down, a, c), x));
                            assert_eq!(b.apply(up, a, b.apply(down, x, c)), b.apply(up, a, x));
                            assert_eq!(b.apply(down, a, b.apply(up, x, c)), b.apply(down, a, x));
                        }
                    }
                    assert_eq!(b.up(a, b.up(x, c)), b.up(b.up(b.bar_up(a, c), x), c));
                    assert_eq!(b.down(a, b.down(x, c)), b.down(b.down(b.bar_down(a, c), x), c));
                }
            }
        }
    }
}

#[test]
fn materialized_r_relations_agree_with_the_table_check() {
    for b in up_to(3) {
        let n = b.order();
        let gens: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let env: BTreeMap<String, usize> = gens.iter().cloned().zip(0..n).collect();
        let rels = materialize_r(&gens);
        assert_eq!(rels.len(), 4 * n * n * n);
        let holds = rels.iter().all(|r| r.lhs.eval(&env, &b) == r.rhs.eval(&env, &b));
        assert_eq!(holds, b.satisfies_r());
        assert_eq!(b.r_violation().is_none(), b.satisfies_r());
    }
}

#[test]
fn r_violation_in_z5_is_genuine() {
    let z5 = FiniteBiquandle::from_fn(5, |a, b| (a + 4 * b) % 5, |a, _| (2 * a) % 5).unwrap();
    let v = z5.r_violation().unwrap();
    let (outer, inner) = v.identity.ops();
    let (a, x, c) = v.triple;
    assert_eq!(z5.apply(outer, a, z5.apply(inner, x, c)), v.left);
    assert_eq!(z5.apply(outer, a, x), v.right);
    assert_ne!(v.left, v.right);
}

#[test]
fn enumeration_counts_are_stable() {
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_biquandles(n).unwrap().len()).collect();
    assert_eq!(counts[3], 744);
    let order4 = enumerate_biquandles(4).unwrap();
    assert_eq!(order4.iter().filter(|b| b.satisfies_r()).count(), 456);
    assert_eq!(order4.iter().filter(|b| b.is_quandle()).count(), 36);
}
