//! The free topological model: triples `a ^[w1] _[w2]`.
//!
//! A triple stands for `a ↑ w1 ↓ w2`, where a positive letter `g+` in the
//! up-word acts by `↑ g` and a negative one by `↑̄ g` (likewise for the
//! down-word). Up-type operations only read the operand's up-word and
//! down-type operations only its down-word.
//!
//! The meridian of the base may slide from one word to the other:
//! `(a, a^k·w1, a^k·w2)` is the same element for every integer `k`. This
//! identification is what makes the kink axiom hold, since `a ↑̄ a` is
//! `(a, [a-], [])` and `a ↓ (a ↑̄ a)` is `(a, [], [a+])`. Triples are kept in
//! the representative whose down-word does not start with the base.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::string::String;

use super::word::{Letter, Word};
use super::{EvalError, Term};
use crate::algebra::FiniteBiquandle;
use crate::op::{Op, Sign};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopTriple {
    base: String,
    up: Word,
    down: Word,
}

impl TopTriple {
    /// The element `base ↑ up ↓ down`, in canonical form.
    pub fn new(base: impl Into<String>, up: Word, down: Word) -> Self {
        let base = base.into();
        let shift = down.letters().iter().take_while(|l| l.gen == base).count();
        if shift == 0 {
            return TopTriple { base, up, down };
        }
        // down = a^k·rest, so (a, up, down) = (a, a^-k·up, rest).
        let lead = Word::new(down.letters()[..shift].iter().cloned());
        let rest = Word::new(down.letters()[shift..].iter().cloned());
        TopTriple { up: lead.inverse().concat(&up), down: rest, base }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn up(&self) -> &Word {
        &self.up
    }

    pub fn down(&self) -> &Word {
        &self.down
    }

    /// The bare generator `(g, ε, ε)`.
    pub fn generator(g: impl Into<String>) -> Self {
        TopTriple::new(g, Word::empty(), Word::empty())
    }

    /// `self ↑ y`: append the meridian of `y.base` conjugated by `y.up`.
    pub fn top_up(&self, y: &TopTriple) -> TopTriple {
        self.act(y, true, Sign::Pos)
    }

    pub fn top_bar_up(&self, y: &TopTriple) -> TopTriple {
        self.act(y, true, Sign::Neg)
    }

    pub fn top_down(&self, y: &TopTriple) -> TopTriple {
        self.act(y, false, Sign::Pos)
    }

    pub fn top_bar_down(&self, y: &TopTriple) -> TopTriple {
        self.act(y, false, Sign::Neg)
    }

    pub fn apply(&self, op: Op, y: &TopTriple) -> TopTriple {
        self.act(y, op.is_up_type(), op.sign())
    }

    fn act(&self, y: &TopTriple, up_type: bool, sign: Sign) -> TopTriple {
        let letter = Letter::new(y.base.clone(), sign);
        if up_type {
            let up = self.up.concat(&Word::conjugate(&letter, &y.up));
            TopTriple::new(self.base.clone(), up, self.down.clone())
        } else {
            let down = self.down.concat(&Word::conjugate(&letter, &y.down));
            TopTriple::new(self.base.clone(), self.up.clone(), down)
        }
    }

    /// Number of letters in both words.
    pub fn letter_count(&self) -> usize {
        self.up.len() + self.down.len()
    }

    pub fn is_bare(&self) -> bool {
        self.up.is_empty() && self.down.is_empty()
    }

    pub fn mentions(&self, g: &str) -> bool {
        self.base == g || self.up.mentions(g) || self.down.mentions(g)
    }

    /// The term `base ↑… ↓…` folding one generator operand per letter.
    pub fn to_term(&self) -> Term {
        let mut t = Term::gen(self.base.clone());
        for (word, up_type) in [(&self.up, true), (&self.down, false)] {
            for l in word.letters() {
                t = Term::app(Op::from_parts(up_type, l.sign), t, Term::gen(l.gen.clone()));
            }
        }
        t
    }

    /// Evaluate in `b`: fold the up-word onto `env(base)`, then the down-word.
    pub fn eval(&self, env: &BTreeMap<String, usize>, b: &FiniteBiquandle) -> Result<usize, EvalError> {
        let look = |g: &str| env.get(g).copied().ok_or_else(|| EvalError::Unbound(g.into()));
        let mut acc = look(&self.base)?;
        for (word, up_type) in [(&self.up, true), (&self.down, false)] {
            for l in word.letters() {
                acc = b.apply(Op::from_parts(up_type, l.sign), acc, look(&l.gen)?);
            }
        }
        Ok(acc)
    }

    /// Substitute the triple `r` for generator `g`.
    ///
    /// Uses `r ↑ w1 ↓ w2` with `r = (c, u1, u2)` giving `(c, u1·w1, u2·w2)`,
    /// and a letter `g^ε` conjugated as `(c^ε)` by `u` (up-word) or by `u2`
    /// (down-word). Valid in the topological model, where `x ↑ (c ↑ u)` is
    /// `x` followed by `u⁻¹ c u`.
    pub fn substitute(&self, g: &str, r: &TopTriple) -> TopTriple {
        let meridian = |word: &Word, conj: &Word| {
            word.replace_letter(g, &Word::conjugate(&Letter::pos(r.base.clone()), conj))
        };
        let up = meridian(&self.up, &r.up);
        let down = meridian(&self.down, &r.down);
        if self.base == g {
            TopTriple::new(r.base.clone(), r.up.concat(&up), r.down.concat(&down))
        } else {
            TopTriple::new(self.base.clone(), up, down)
        }
    }
}

impl fmt::Display for TopTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ^{} _{}", self.base, self.up, self.down)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(base: &str, up: &[Letter], down: &[Letter]) -> TopTriple {
        TopTriple::new(base, Word::new(up.iter().cloned()), Word::new(down.iter().cloned()))
    }

    #[test]
    fn operation_examples() {
        let a = TopTriple::generator("a");
        let b = TopTriple::generator("b");
        assert_eq!(a.top_up(&b), t("a", &[Letter::pos("b")], &[]));
        let bc = t("b", &[Letter::pos("c")], &[]);
        assert_eq!(a.top_up(&bc), t("a", &[Letter::neg("c"), Letter::pos("b"), Letter::pos("c")], &[]));
        let x = t("a", &[Letter::pos("g")], &[Letter::neg("h")]);
        let y = t("d", &[Letter::neg("e")], &[Letter::pos("f")]);
        assert_eq!(x.top_up(&y).top_bar_up(&y), x);
        assert_eq!(x.top_down(&y).top_bar_down(&y), x);
    }

    #[test]
    fn kink_axiom_needs_the_meridian_slide() {
        let a = TopTriple::generator("a");
        assert_eq!(a.top_bar_up(&a), a.top_down(&a.top_bar_up(&a)));
        assert_eq!(a.top_bar_down(&a), a.top_up(&a.top_bar_down(&a)));
        assert_eq!(t("a", &[], &[Letter::pos("a"), Letter::pos("b")]), t("a", &[Letter::neg("a")], &[Letter::pos("b")]));
        assert_eq!(a.top_down(&a).to_string(), "a ^[a-] _[]");
    }

    #[test]
    fn display() {
        let x = t("a", &[Letter::neg("c"), Letter::pos("b"), Letter::pos("c")], &[]);
        assert_eq!(x.to_string(), "a ^[c-,b+,c+] _[]");
    }

    #[test]
    fn eval_examples() {
        let shift = FiniteBiquandle::from_fn(3, |a, _| (a + 1) % 3, |a, _| (a + 2) % 3).unwrap();
        let env: BTreeMap<String, usize> =
            ["a", "b", "c"].into_iter().map(|g| (String::from(g), 0)).collect();
        let x = t("a", &[Letter::pos("b")], &[Letter::pos("c")]);
        assert_eq!(x.eval(&env, &shift), Ok(0));
        assert_eq!(t("a", &[Letter::neg("b")], &[]).eval(&env, &shift), Ok(2));
        let trivial = FiniteBiquandle::trivial(4);
        let env2: BTreeMap<String, usize> = vec![("a".into(), 3), ("b".into(), 1), ("c".into(), 2)].into_iter().collect();
        assert_eq!(x.eval(&env2, &trivial), Ok(3));
        assert_eq!(
            t("z", &[], &[]).eval(&env, &shift),
            Err(EvalError::Unbound("z".into()))
        );
    }

    #[test]
    fn substitute_matches_operations() {
        let a = TopTriple::generator("a");
        let r = t("c", &[Letter::pos("d")], &[Letter::neg("e")]);
        // a ↑ g ↓ g  with g := r
        let x = a.top_up(&TopTriple::generator("g")).top_down(&TopTriple::generator("g"));
        assert_eq!(x.substitute("g", &r), a.top_up(&r).top_down(&r));
        let y = TopTriple::generator("g").top_bar_up(&a);
        assert_eq!(y.substitute("g", &r), r.top_bar_up(&a));
    }
}
