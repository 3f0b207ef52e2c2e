//! Coloring counts on the fixture diagrams, checked against brute force.

use biquandle_core::{
    count_colorings, distinguish, enumerate_biquandles, enumerate_colorings, fundamental_presentation,
    hom_count_presentation, oracle_colorings, oracle_count, parse_pd, topological_presentation, validate_biquandle,
    Diagram, FiniteBiquandle, Mode,
};

const MODES: [Mode; 2] = [Mode::Fundamental, Mode::Topological];

fn fixture(name: &str) -> Diagram {
    let text = match name {
        "unknot" => include_str!("../../../fixtures/unknot.pd"),
        "unlink2" => include_str!("../../../fixtures/unlink2.pd"),
        "kink_pos" => include_str!("../../../fixtures/kink_pos.pd"),
        "kink_neg" => include_str!("../../../fixtures/kink_neg.pd"),
        "trefoil" => include_str!("../../../fixtures/trefoil.pd"),
        "trefoil_r1" => include_str!("../../../fixtures/trefoil_r1.pd"),
        "trefoil_r1_neg" => include_str!("../../../fixtures/trefoil_r1_neg.pd"),
        "trefoil_r2" => include_str!("../../../fixtures/trefoil_r2.pd"),
        "l6n1" => include_str!("../../../fixtures/l6n1.pd"),
        _ => unreachable!("unknown fixture {name}"),
    };
    parse_pd(text).unwrap()
}

const FIXTURES: [&str; 9] =
    ["unknot", "unlink2", "kink_pos", "kink_neg", "trefoil", "trefoil_r1", "trefoil_r1_neg", "trefoil_r2", "l6n1"];

fn targets() -> Vec<FiniteBiquandle> {
    (1..=3).flat_map(|n| enumerate_biquandles(n).unwrap()).collect()
}

fn r3() -> FiniteBiquandle {
    FiniteBiquandle::from_fn(3, |a, b| (2 * b + 3 - a) % 3, |a, _| a).unwrap()
}

fn z5() -> FiniteBiquandle {
    let up: Vec<Vec<usize>> = (0..5).map(|a| (0..5).map(|b| (a + 4 * b) % 5).collect()).collect();
    let down: Vec<Vec<usize>> = (0..5).map(|a| vec![(2 * a) % 5; 5]).collect();
    validate_biquandle(&up, &down).expect("the Z5 tables are a biquandle")
}

/// Closed braids with at most twelve semiarcs.
fn braids() -> Vec<Diagram> {
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

#[test]
fn counts_of_the_standard_examples() {
    let r3 = r3();
    let trefoil = fixture("trefoil");
    let unknot = fixture("unknot");
    for mode in MODES {
        assert_eq!(count_colorings(&trefoil, &r3, mode), 9);
        assert_eq!(oracle_count(&trefoil, &r3, mode), 9);
        assert_eq!(count_colorings(&unknot, &r3, mode), 3);
        assert_eq!(oracle_count(&unknot, &r3, mode), 3);
        let sep = distinguish(&trefoil, &unknot, std::slice::from_ref(&r3), mode).unwrap();
        assert_eq!(sep.counts, (9, 3));
    }
    assert_eq!(count_colorings(&fixture("unlink2"), &r3, Mode::Fundamental), 9);
}

#[test]
fn reidemeister_variants_are_not_distinguished() {
    let ts = targets();
    let trefoil = fixture("trefoil");
    for variant in ["trefoil_r1", "trefoil_r1_neg", "trefoil_r2"] {
        let d = fixture(variant);
        for mode in MODES {
            assert_eq!(distinguish(&trefoil, &d, &ts, mode), None, "{variant} {mode}");
        }
    }
    let unknot = fixture("unknot");
    for kinked in ["kink_pos", "kink_neg"] {
        for mode in MODES {
            assert_eq!(distinguish(&unknot, &fixture(kinked), &ts, mode), None, "{kinked} {mode}");
        }
    }
}

#[test]
fn braid_trefoil_agrees_with_the_fixture() {
    let braid = Diagram::braid_closure(2, &[1, 1, 1]);
    let trefoil = fixture("trefoil");
    for b in targets() {
        for mode in MODES {
            assert_eq!(count_colorings(&braid, &b, mode), count_colorings(&trefoil, &b, mode));
        }
    }
}

#[test]
fn topological_counts_are_bounded_by_fundamental_counts() {
    let mut ts = targets();
    ts.push(z5());
    let mut strict = Vec::new();
    for name in FIXTURES {
        let d = fixture(name);
        for (i, b) in ts.iter().enumerate() {
            let f = count_colorings(&d, b, Mode::Fundamental);
            let t = count_colorings(&d, b, Mode::Topological);
            assert!(t <= f, "{name} target {i}: {t} > {f}");
            if b.satisfies_r() {
                assert_eq!(t, f, "{name} target {i}");
            }
            if b.is_quandle() {
                assert_eq!(t, f, "{name} target {i}");
            }
            if t < f {
                strict.push((name, i));
            }
        }
    }
    // The quotient is strict already at order three.
    assert!(strict.iter().any(|&(name, i)| name == "trefoil" && ts[i].order() == 3));
}

#[test]
fn propagation_matches_brute_force() {
    let order3 = enumerate_biquandles(3).unwrap();
    let mut diagrams: Vec<Diagram> = FIXTURES.iter().map(|n| fixture(n)).collect();
    diagrams.extend(braids());
    for d in &diagrams {
        assert!(d.semiarcs().len() <= 12);
        for b in &order3 {
            for mode in MODES {
                assert_eq!(enumerate_colorings(d, b, mode), oracle_colorings(d, b, mode), "{}", d.to_text());
            }
        }
    }
}

#[test]
fn presentation_hom_counts_equal_coloring_counts() {
    let ts = targets();
    for name in FIXTURES {
        let d = fixture(name);
        let (f, t) = (fundamental_presentation(&d), topological_presentation(&d));
        for b in &ts {
            assert_eq!(hom_count_presentation(&f, b), count_colorings(&d, b, Mode::Fundamental), "{name}");
            assert_eq!(hom_count_presentation(&t, b), count_colorings(&d, b, Mode::Topological), "{name}");
        }
    }
}
