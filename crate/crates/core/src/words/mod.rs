//! Freely reduced words in a free group on generators `x1, x2, ...`, and the
//! abelianized Fox derivative.

mod text;

use std::fmt;

use crate::laurent::LaurentPoly;
use num_bigint::BigInt;

pub use text::WordSyntaxError;
pub(crate) use text::{parse_runs, render_runs};

/// A run `x_gen^exp`. Generators are 1-based; `exp` is never zero inside a
/// reduced [`Word`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: usize, exp: i64) -> Self {
        Letter { gen, exp }
    }
}

/// A freely reduced word stored as maximal runs: adjacent letters always have
/// distinct generators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The word `x_gen`.
    pub fn gen(gen: usize) -> Self {
        Self::power_of(gen, 1)
    }

    pub fn power_of(gen: usize, exp: i64) -> Self {
        let mut w = Word::identity();
        w.push(Letter::new(gen, exp));
        w
    }

    /// Reduces an arbitrary sequence of runs.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// `x_a x_{a+1} ... x_b`.
    pub fn product_range(a: usize, b: usize) -> Self {
        Self::from_letters((a..=b).map(|g| Letter::new(g, 1)))
    }

    /// Appends a run, cancelling against the tail.
    pub fn push(&mut self, l: Letter) {
        assert!(l.gen >= 1, "generator indices are 1-based");
        if l.exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.gen == l.gen => {
                last.exp += l.exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of runs.
    pub fn run_count(&self) -> usize {
        self.letters.len()
    }

    /// Letter length, counting `x^e` as `|e|` letters.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, or zero for the identity.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    /// The image `t^exponent_sum` under the map sending every generator to `t`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exp).sum()
    }

    pub fn compose(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| Letter::new(l.gen, -l.exp)).collect() }
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().compose(self).compose(by)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// Renames every generator.
    pub fn map_generators(&self, mut f: impl FnMut(usize) -> usize) -> Word {
        Word::from_letters(self.letters.iter().map(|l| Letter::new(f(l.gen), l.exp)))
    }

    /// Applies the endomorphism sending `x_g` to `image(g)`.
    pub fn substitute(&self, mut image: impl FnMut(usize) -> Word) -> Word {
        let mut out = Word::identity();
        for l in &self.letters {
            out = out.compose(&image(l.gen).pow(l.exp));
        }
        out
    }

    /// Image of `d(self)/dx_gen` in `Z[t, t^-1]` under the map sending every
    /// generator to `t`.
    ///
    /// Left to right with running exponent sum `s`: a run `x_gen^e` adds
    /// `t^s + ... + t^(s+e-1)` when `e > 0` and `-(t^(s-1) + ... + t^(s+e))`
    /// when `e < 0`.
    pub fn fox_abelianized(&self, gen: usize) -> LaurentPoly {
        let mut coeffs: std::collections::BTreeMap<i64, i64> = Default::default();
        let mut s = 0i64;
        for l in &self.letters {
            if l.gen == gen {
                if l.exp > 0 {
                    for k in 0..l.exp {
                        *coeffs.entry(s + k).or_default() += 1;
                    }
                } else {
                    for k in 1..=-l.exp {
                        *coeffs.entry(s - k).or_default() -= 1;
                    }
                }
            }
            s += l.exp;
        }
        let Some((&low, _)) = coeffs.first_key_value() else {
            return LaurentPoly::zero();
        };
        let high = *coeffs.last_key_value().unwrap().0;
        let dense = (low..=high).map(|e| BigInt::from(coeffs.get(&e).copied().unwrap_or(0))).collect();
        LaurentPoly::new(low, dense)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_runs(self.letters.iter().map(|l| (l.gen, l.exp)), 'x'))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl std::str::FromStr for Word {
    type Err = WordSyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let runs = parse_runs(s, 'x')?;
        Ok(Word::from_letters(runs.into_iter().map(|(g, e)| Letter::new(g, e))))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    pub(crate) fn arb_word(gens: usize, max_runs: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1..=gens, -3i64..=3), 0..=max_runs)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|(g, e)| Letter::new(g, e))))
    }

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    #[test]
    fn cancellation() {
        assert!(w("x1").compose(&w("x1^-1")).is_identity());
        assert_eq!(w("x1 x2").compose(&w("x2^-1 x3")), w("x1 x3"));
        let c = w("x1").conjugate(&w("x2"));
        assert_eq!(c, w("x2^-1 x1 x2"));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn runs_merge() {
        let x = w("x2 x2 x2^-1 x1^2 x1");
        assert_eq!(x.letters(), &[Letter::new(2, 1), Letter::new(1, 3)]);
        assert_eq!(x.len(), 4);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("x1 x2 x3").exponent_sum(), 3);
        assert_eq!(w("x1 x2 x1^-1 x2^-1").exponent_sum(), 0);
        assert_eq!(w("(x1 x2)^3 (x2 x1)^-3").exponent_sum(), 0);
    }

    #[test]
    fn fox_of_generators() {
        assert_eq!(w("x1").fox_abelianized(1), LaurentPoly::one());
        assert!(w("x1").fox_abelianized(2).is_zero());
        assert_eq!(w("x1^-1").fox_abelianized(1), p(-1, &[-1]));
    }

    #[test]
    fn fox_of_commutator() {
        assert_eq!(w("x1 x2 x1^-1 x2^-1").fox_abelianized(1), p(0, &[1, -1]));
        assert_eq!(w("x1 x2 x1^-1 x2^-1").fox_abelianized(2), p(0, &[-1, 1]));
    }

    #[test]
    fn fox_of_two_strand_relator() {
        for m in 1..=4i64 {
            let r = w(&format!("(x1 x2)^{m} (x2 x1)^-{m}"));
            // 1 + t^2 + ... + t^(2m-2) - t - t^3 - ... - t^(2m-1)
            let d1 =
                LaurentPoly::geometric(0, 2, m as usize, 1) - LaurentPoly::geometric(1, 2, m as usize, 1);
            // t + t^3 + ... + t^(2m-1) - 1 - t^2 - ... - t^(2m-2)
            let d2 =
                LaurentPoly::geometric(1, 2, m as usize, 1) - LaurentPoly::geometric(0, 2, m as usize, 1);
            assert_eq!(r.fox_abelianized(1), d1, "m = {m}");
            assert_eq!(r.fox_abelianized(2), d2, "m = {m}");
        }
    }

    /// Letter-by-letter reference: expands runs and applies the product rule
    /// one generator at a time.
    fn fox_reference(word: &Word, gen: usize) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        let mut s = 0;
        for l in word.letters() {
            let step = l.exp.signum();
            for _ in 0..l.exp.abs() {
                if l.gen == gen {
                    let term = if step > 0 {
                        LaurentPoly::monomial(1.into(), s)
                    } else {
                        LaurentPoly::monomial((-1).into(), s - 1)
                    };
                    acc += &term;
                }
                s += step;
            }
        }
        acc
    }

    proptest! {
        #[test]
        fn fundamental_identity(x in arb_word(4, 10)) {
            let lhs = &LaurentPoly::sum((1..=4).map(|i| x.fox_abelianized(i)).collect::<Vec<_>>().iter())
                * &LaurentPoly::from_i64s(0, &[-1, 1]);
            let rhs = LaurentPoly::monomial(1.into(), x.exponent_sum()) - LaurentPoly::one();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_rule(u in arb_word(3, 8), v in arb_word(3, 8), i in 1usize..=3) {
            let lhs = u.compose(&v).fox_abelianized(i);
            let rhs = &u.fox_abelianized(i)
                + &v.fox_abelianized(i).shift(u.exponent_sum());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_rule(u in arb_word(3, 8), i in 1usize..=3) {
            let lhs = u.inverse().fox_abelianized(i);
            let rhs = -u.fox_abelianized(i).shift(-u.exponent_sum());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn closed_form_matches_letterwise(u in arb_word(3, 8), i in 1usize..=3) {
            prop_assert_eq!(u.fox_abelianized(i), fox_reference(&u, i));
        }

        #[test]
        fn reduction_is_associative(a in arb_word(3, 6), b in arb_word(3, 6), c in arb_word(3, 6)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            let adj = a.letters().windows(2).all(|p| p[0].gen != p[1].gen);
            prop_assert!(adj);
        }

        #[test]
        fn text_round_trip(a in arb_word(5, 8)) {
            prop_assert_eq!(a.to_string().parse::<Word>().unwrap(), a);
        }
    }
}
