//! The free topological model is a biquandle, with exact word equality.

use std::collections::BTreeSet;

use biquandle_core::{Letter, Op, TopTriple, Word};
use proptest::prelude::*;

const UP_TYPE: [Op; 2] = [Op::Up, Op::BarUp];
const DOWN_TYPE: [Op; 2] = [Op::Down, Op::BarDown];

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((prop::sample::select(vec!["a", "b", "c", "d"]), any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::new(ls.into_iter().map(|(g, p)| if p { Letter::pos(g) } else { Letter::neg(g) })))
}

fn arb_triple() -> impl Strategy<Value = TopTriple> {
    (prop::sample::select(vec!["a", "b", "c", "d"]), arb_word(4), arb_word(4))
        .prop_map(|(g, u, d)| TopTriple::new(g, u, d))
}

fn switch(x: &TopTriple, y: &TopTriple) -> (TopTriple, TopTriple) {
    (y.top_down(x), x.top_up(y))
}

/// `S⁻¹(p, q) = (q ↑̄ (p ↓̄ q), p ↓̄ q)`; both composites are checked below.
fn switch_inverse(p: &TopTriple, q: &TopTriple) -> (TopTriple, TopTriple) {
    let y = p.top_bar_down(q);
    (q.top_bar_up(&y), y)
}

/// Every reduced word over `gens` with at most `max_len` letters.
fn words(gens: &[&str], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for w in &frontier {
            for g in gens {
                for l in [Letter::pos(*g), Letter::neg(*g)] {
                    let v = w.concat(&Word::letter(l));
                    if v.len() == w.len() + 1 {
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

/// Canonical triples over `gens` whose words satisfy `keep(up_len, down_len)`.
fn universe(gens: &[&str], max_len: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<TopTriple> {
    let ws = words(gens, max_len);
    let mut out = BTreeSet::new();
    for g in gens {
        for u in &ws {
            for d in &ws {
                if keep(u.len(), d.len()) {
                    out.insert(TopTriple::new(*g, u.clone(), d.clone()));
                }
            }
        }
    }
    out.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn axioms_hold_on_random_triples(a in arb_triple(), b in arb_triple(), c in arb_triple()) {
        // Axiom 1: the column maps and S are bijections.
        prop_assert_eq!(a.top_up(&b).top_bar_up(&b), a.clone());
        prop_assert_eq!(a.top_bar_up(&b).top_up(&b), a.clone());
        prop_assert_eq!(a.top_down(&b).top_bar_down(&b), a.clone());
        prop_assert_eq!(a.top_bar_down(&b).top_down(&b), a.clone());
        let (p, q) = switch(&a, &b);
        prop_assert_eq!(switch_inverse(&p, &q), (a.clone(), b.clone()));
        let (x, y) = switch_inverse(&a, &b);
        prop_assert_eq!(switch(&x, &y), (a.clone(), b.clone()));

        // Axiom 2: the fixed points of the inverse column maps.
        let fa = a.top_bar_up(&a);
        prop_assert_eq!(a.top_down(&fa), fa);
        let ga = a.top_bar_down(&a);
        prop_assert_eq!(a.top_up(&ga), ga);

        // Axiom 3: both interchanges and the rule of five.
        prop_assert_eq!(a.top_up(&b).top_up(&c), a.top_up(&c.top_down(&b)).top_up(&b.top_up(&c)));
        prop_assert_eq!(
            a.top_down(&b).top_up(&c.top_down(&b.top_up(&a))),
            a.top_up(&c).top_down(&b.top_up(&c.top_down(&a)))
        );
        prop_assert_eq!(a.top_down(&b).top_down(&c), a.top_down(&c.top_up(&b)).top_down(&b.top_down(&c)));
    }

    #[test]
    fn the_meridian_slide_is_respected(a in arb_triple(), b in arb_triple(), k in -2i32..=2) {
        // (g, g^k·w1, g^k·w2) must act and be acted on like (g, w1, w2).
        let g = a.base().to_string();
        let power = Word::new((0..k.unsigned_abs()).map(|_| if k > 0 { Letter::pos(g.as_str()) } else { Letter::neg(g.as_str()) }));
        let slid = TopTriple::new(g.as_str(), power.concat(a.up()), power.concat(a.down()));
        prop_assert_eq!(&slid, &a);
        for op in Op::ALL {
            prop_assert_eq!(slid.apply(op, &b), a.apply(op, &b));
            prop_assert_eq!(b.apply(op, &slid), b.apply(op, &a));
        }
    }
}

#[test]
fn inverse_identities_exhaustive_at_word_length_two() {
    let all = universe(&["a", "b"], 2, |_, _| true);
    for a in &all {
        for b in &all {
            assert_eq!(&a.top_up(b).top_bar_up(b), a, "{a} ^ {b} ^- {b}");
            assert_eq!(&a.top_bar_up(b).top_up(b), a, "{a} ^- {b} ^ {b}");
            assert_eq!(&a.top_down(b).top_bar_down(b), a, "{a} _ {b} _- {b}");
            assert_eq!(&a.top_bar_down(b).top_down(b), a, "{a} _- {b} _ {b}");
        }
    }
}

#[test]
fn three_variable_identities_exhaustive_at_word_length_two() {
    // Three free variables: bound the total letters of each triple by two.
    let all = universe(&["a", "b"], 2, |u, d| u + d <= 2);
    assert!(all.len() > 50);
    for a in &all {
        for b in &all {
            for c in &all {
                for up in UP_TYPE {
                    for down in DOWN_TYPE {
                        // Up-type and down-type operations commute.
                        assert_eq!(a.apply(up, b).apply(down, c), a.apply(down, c).apply(up, b), "{a} {up} {b} {down} {c}");
                        // Up-type operations ignore the operand's down-word and vice versa.
                        assert_eq!(a.apply(up, &b.apply(down, c)), a.apply(up, b), "{a} {up} ({b} {down} {c})");
                        assert_eq!(a.apply(down, &b.apply(up, c)), a.apply(down, b), "{a} {down} ({b} {up} {c})");
                    }
                }
            }
        }
    }
}

#[test]
fn kink_axiom_relies_on_the_meridian_slide() {
    let a = TopTriple::generator("a");
    let fa = a.top_bar_up(&a);
    assert_eq!(fa.to_string(), "a ^[a-] _[]");
    assert_eq!(a.top_down(&fa).to_string(), "a ^[a-] _[]");
}
