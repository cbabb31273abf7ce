//! Braid words, the Artin action on free groups, and the torus-type
//! presentations `G_{n,m}`.

use std::fmt;

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::presentation::{generator_conjugate, CPresentation, CRelation};
use crate::words::{parse_runs, render_runs, Letter, Word, WordSyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator s{index} outside 1..={max} for {strands} strands", max = .strands - 1)]
    LetterOutOfRange { index: usize, strands: usize },
    #[error("generator x{index} outside 1..={strands}")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("{0} is not a conjugate of a single generator")]
    NotAConjugate(String),
    #[error("gcd({n}, {m}) != 1")]
    NotCoprime { n: u64, m: u64 },
    #[error(transparent)]
    Syntax(#[from] WordSyntaxError),
}

/// A word in `s_1, ..., s_{n-1}`, each letter with sign `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for &(i, s) in &letters {
            assert!(s == 1 || s == -1, "braid letters have sign ±1");
            if i == 0 || i >= strands {
                return Err(BraidError::LetterOutOfRange { index: i, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Parses `s1 s2^-1 (s1 s2)^3` for a braid on `strands` strands.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for (i, e) in parse_runs(text, 's')? {
            let sign = e.signum() as i8;
            letters.extend(std::iter::repeat_n((i, sign), e.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Images of `x_1, ..., x_n` under the Artin action.
    pub fn generator_images(&self) -> Vec<Word> {
        let n = self.strands;
        let mut images: Vec<Word> = (1..=n).map(Word::gen).collect();
        for &(j, s) in &self.letters {
            for img in images.iter_mut() {
                *img = img.substitute(|g| letter_image(j, s, g));
            }
        }
        images
    }
}

/// `σ_j^{±1}(x_g)`.
fn letter_image(j: usize, sign: i8, g: usize) -> Word {
    let x = Word::gen;
    match (sign > 0, g) {
        (true, g) if g == j => {
            Word::from_letters([Letter::new(j, 1), Letter::new(j + 1, 1), Letter::new(j, -1)])
        }
        (true, g) if g == j + 1 => x(j),
        (false, g) if g == j => x(j + 1),
        (false, g) if g == j + 1 => {
            Word::from_letters([Letter::new(j + 1, -1), Letter::new(j, 1), Letter::new(j + 1, 1)])
        }
        (_, g) => x(g),
    }
}

/// Applies the letters of `b` to `w` from left to right.
pub fn artin_apply(b: &BraidWord, w: &Word) -> Result<Word, BraidError> {
    if w.max_generator() > b.strands {
        return Err(BraidError::GeneratorOutOfRange { index: w.max_generator(), strands: b.strands });
    }
    let images = b.generator_images();
    Ok(w.substitute(|g| images[g - 1].clone()))
}

/// `(σ_1 ... σ_{n-1})^n`, the generator of the center.
pub fn full_twist(n: usize) -> BraidWord {
    b_nm(n, n as u32)
}

/// The Garside element `σ_1 (σ_2 σ_1) ... (σ_{n-1} ... σ_1)`.
pub fn half_twist(n: usize) -> BraidWord {
    let letters = (1..n).flat_map(|k| (1..=k).rev().map(|i| (i, 1i8))).collect();
    BraidWord::new(n, letters).expect("at least 2 strands")
}

/// `(σ_1 ... σ_{n-1})^m`, the monodromy of `w^n = z^m`.
pub fn b_nm(n: usize, m: u32) -> BraidWord {
    let cycle = BraidWord::new(n, (1..n).map(|i| (i, 1)).collect()).expect("at least 2 strands");
    cycle.pow(m)
}

/// Reads `u x_j u^-1` as `(j, u^-1)`.
pub fn extract_conjugate(w: &Word) -> Result<(usize, Word), BraidError> {
    generator_conjugate(w).ok_or_else(|| BraidError::NotAConjugate(w.to_string()))
}

/// `<x_1..x_n | x_i = b_{n,m}(x_i)>` with Hurwitz degree `n m` and central
/// word `(x_1 ... x_n)^m`.
pub fn g_nm_presentation(n: usize, m: u32) -> CPresentation {
    let b = b_nm(n, m);
    let relations = b
        .generator_images()
        .iter()
        .enumerate()
        .map(|(i, img)| {
            let (j, conj) = extract_conjugate(img).expect("Artin images are conjugates of generators");
            CRelation::new(i + 1, j, conj)
        })
        .collect();
    let word = (m != 1).then(|| Word::product_range(1, n).pow(m as i64));
    CPresentation::new(n, relations)
        .and_then(|p| p.with_hurwitz(n * m as usize, word))
        .expect("valid by construction")
        .with_label(format!("G_{{{n},{m}}}"))
}

/// `(t - 1)(t^{nm} - 1) / ((t^n - 1)(t^m - 1))`, canonical.
pub fn le_formula(n: u64, m: u64) -> Result<LaurentPoly, BraidError> {
    if num_integer::gcd(n, m) != 1 {
        return Err(BraidError::NotCoprime { n, m });
    }
    let tk_minus_one = |k: u64| LaurentPoly::from_i64s(0, &[-1]) + LaurentPoly::monomial(1.into(), k as i64);
    let num = &tk_minus_one(1) * &tk_minus_one(n * m);
    let den = &tk_minus_one(n) * &tk_minus_one(m);
    Ok(num.exact_div(&den).expect("coprime quotient is a polynomial").canonical())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut runs: Vec<(usize, i64)> = Vec::new();
        for &(i, s) in &self.letters {
            match runs.last_mut() {
                Some((j, e)) if *j == i && e.signum() == s as i64 => *e += s as i64,
                _ => runs.push((i, s as i64)),
            }
        }
        f.write_str(&render_runs(runs.into_iter(), 's'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::tests::{arb_word, w};
    use proptest::prelude::*;

    fn apply(b: &BraidWord, x: &Word) -> Word {
        artin_apply(b, x).unwrap()
    }

    #[test]
    fn single_letters() {
        let s1 = BraidWord::parse(2, "s1").unwrap();
        assert_eq!(apply(&s1, &w("x2")), w("x1"));
        assert_eq!(apply(&s1, &w("x1")), w("x1 x2 x1^-1"));
        let s1i = s1.inverse();
        assert_eq!(apply(&s1i, &w("x1")), w("x2"));
        assert_eq!(apply(&s1i, &w("x2")), w("x2^-1 x1 x2"));
        let s2 = BraidWord::parse(3, "s2").unwrap();
        assert_eq!(apply(&s2, &w("x1")), w("x1"));
    }

    #[test]
    fn triple_twist_on_x1() {
        let b = b_nm(2, 3);
        assert_eq!(b, BraidWord::parse(2, "s1^3").unwrap());
        let img = apply(&b, &w("x1"));
        assert_eq!(img, w("x1 x2 x1 x2 x1^-1 x2^-1 x1^-1"));
        let (j, conj) = extract_conjugate(&img).unwrap();
        assert_eq!(j, 2);
        assert_eq!(conj, w("x1^-1 x2^-1 x1^-1"));
        assert_eq!(conj.len(), 3);
    }

    #[test]
    fn extract_conjugate_basics() {
        assert_eq!(extract_conjugate(&w("x1")).unwrap(), (1, Word::identity()));
        assert_eq!(extract_conjugate(&w("x1 x2 x1^-1")).unwrap(), (2, w("x1^-1")));
        assert!(matches!(extract_conjugate(&w("x1 x2")), Err(BraidError::NotAConjugate(_))));
    }

    #[test]
    fn twists() {
        assert_eq!(full_twist(2), BraidWord::parse(2, "s1^2").unwrap());
        assert_eq!(half_twist(3), BraidWord::parse(3, "s1 s2 s1").unwrap());
        assert_eq!(half_twist(4).len(), 6);
        for n in 2..=4 {
            let y = Word::product_range(1, n);
            let ft = full_twist(n);
            let ht2 = half_twist(n).pow(2);
            for i in 1..=n {
                let xi = Word::gen(i);
                assert_eq!(apply(&ft, &xi), xi.conjugate(&y.inverse()), "n = {n}, i = {i}");
                assert_eq!(apply(&ht2, &xi), apply(&ft, &xi));
            }
            assert_eq!(b_nm(n, n as u32), ft);
        }
        assert_eq!(b_nm(2, 4), BraidWord::parse(2, "s1^4").unwrap());
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(BraidWord::parse(2, "s2"), Err(BraidError::LetterOutOfRange { .. })));
        assert!(BraidWord::parse(1, "").is_err());
        let b = BraidWord::parse(2, "s1").unwrap();
        assert!(matches!(artin_apply(&b, &w("x3")), Err(BraidError::GeneratorOutOfRange { .. })));
    }

    #[test]
    fn text_form() {
        let b = BraidWord::parse(3, "s1 s1 s2^-1 s2^-1 s1^-1 s1").unwrap();
        assert_eq!(b.to_string(), "s1^2 s2^-2 s1^-1 s1");
        assert_eq!(BraidWord::parse(3, &b.to_string()).unwrap(), b);
        assert_eq!(BraidWord::identity(2).unwrap().to_string(), "1");
    }

    #[test]
    fn le_formula_values() {
        let p = |c: &[i64]| LaurentPoly::from_i64s(0, c);
        assert_eq!(le_formula(2, 3).unwrap(), p(&[1, -1, 1]));
        assert_eq!(le_formula(2, 5).unwrap(), p(&[1, -1, 1, -1, 1]));
        assert!(le_formula(1, 7).unwrap().is_one());
        assert_eq!(le_formula(2, 4), Err(BraidError::NotCoprime { n: 2, m: 4 }));
    }

    #[test]
    fn g_nm_shape() {
        let g = g_nm_presentation(2, 3);
        assert_eq!(g.label(), Some("G_{2,3}"));
        assert_eq!(g.hurwitz_degree(), Some(6));
        assert_eq!(g.hurwitz_word(), Some(&w("(x1 x2)^3")));
        assert_eq!(g.components(), 1);
        assert_eq!(g_nm_presentation(2, 4).components(), 2);
        assert_eq!(g_nm_presentation(2, 6).components(), 2);
    }

    fn arb_braid(n: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..n, prop::bool::ANY), 0..8).prop_map(move |v| {
            BraidWord::new(n, v.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn inverse_undoes(b in arb_braid(4), x in arb_word(4, 6)) {
            let there = apply(&b, &x);
            prop_assert_eq!(apply(&b.compose(&b.inverse()), &x), x.clone());
            prop_assert_eq!(apply(&b.inverse(), &there), x);
        }

        #[test]
        fn product_is_preserved(b in arb_braid(4)) {
            let images = b.generator_images();
            let prod = images.iter().fold(Word::identity(), |acc, w| acc.compose(w));
            prop_assert_eq!(prod, Word::product_range(1, 4));
            for img in &images {
                prop_assert!(extract_conjugate(img).is_ok());
            }
        }
    }
}
