//! Named presentations and the constructions that combine them.

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::presentation::{parse, CPresentation, CRelation, PresentationError};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("presentation {0} has no Hurwitz degree")]
    MissingHurwitzDegree(String),
    #[error("malformed central word witness: {0}")]
    MalformedWitness(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// `<x_1..x_m | [x_i, x_1...x_m] = 1>`.
pub fn universal_hurwitz(m: usize) -> CPresentation {
    assert!(m >= 2, "universal Hurwitz group needs m >= 2");
    let y = Word::product_range(1, m);
    let relations = (1..=m).map(|i| CRelation::commute(i, y.clone())).collect();
    CPresentation::new(m, relations)
        .and_then(|p| p.with_hurwitz(m, None))
        .expect("valid by construction")
        .with_label(format!("G~_{m}"))
}

/// Characteristic polynomial `det(t I - h)` of the monodromy permutation on
/// the abelianized kernel of the universal Hurwitz group of degree `m`.
///
/// The basis is `a_{0,m}` together with `a_{k,j}` for `k = 1..m`,
/// `j = 2..m-1`; `h` fixes `a_{0,m}` and sends `a_{k,j}` to `a_{k+1,j}`,
/// with `a_{m,j}` going to `a_{1,j}`. A permutation matrix has
/// characteristic polynomial `prod (t^len - 1)` over its cycles.
pub fn universal_char_oracle(m: usize) -> LaurentPoly {
    assert!(m >= 2, "universal Hurwitz group needs m >= 2");
    // index 0 is a_{0,m}; a_{k,j} sits at 1 + (j - 2) m + (k - 1)
    let size = 1 + (m - 2) * m;
    let index = |k: usize, j: usize| 1 + (j - 2) * m + (k - 1);
    let mut h = vec![0usize; size];
    for j in 2..m {
        for k in 1..=m {
            h[index(k, j)] = index(if k == m { 1 } else { k + 1 }, j);
        }
    }
    let mut seen = vec![false; size];
    let mut result = LaurentPoly::one();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = h[x];
            len += 1;
        }
        let cycle = LaurentPoly::monomial(1.into(), len) - LaurentPoly::one();
        result = &result * &cycle;
    }
    result
}

/// The abelian C-group `Z^n`: `x_i = x_j^-1 x_i x_j` for all `i != j`,
/// Hurwitz of degree `n`.
pub fn abelian_cgroup(n: usize) -> CPresentation {
    assert!(n >= 1, "abelian C-group needs n >= 1");
    let relations = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| CRelation::commute(i, Word::gen(j))))
        .collect();
    CPresentation::new(n, relations)
        .and_then(|p| p.with_hurwitz(n, None))
        .expect("valid by construction")
        .with_label(format!("Z^{n}"))
}

const G2_TEXT: &str = "\
label: G(2)
generators: 4
hurwitz_degree: 4
rel: x4 = x2^2 x1 x2^-2
rel: x3 = x2
rel: x2 = x4^2 x2 x4^-2
central: x1 x2 x3 x4
";

/// The Hurwitz group `G(2)` of degree 4 with two components.
pub fn g2_presentation() -> CPresentation {
    parse(G2_TEXT).expect("built-in text parses")
}

/// A quasipositive word `x̄_1 ... x̄_M` with `x̄_j = w_j^-1 x_{i_j} w_j`,
/// and for each original generator `x_i` the position `j(i)` where
/// `x̄_{j(i)} = x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralWordWitness {
    /// `(i_j, w_j)` per position, 1-based generators of the source.
    pub letters: Vec<(usize, Word)>,
    /// `injection[i - 1]` is the 1-based position of `x_i`.
    pub injection: Vec<usize>,
}

impl CentralWordWitness {
    /// Reads a positive word as a witness with trivial conjugators, placing
    /// each generator at its first occurrence.
    pub fn from_positive_word(w: &Word, generators: usize) -> Result<Self, ConstructionError> {
        let mut letters = Vec::new();
        for l in w.letters() {
            if l.exp < 0 {
                return Err(ConstructionError::MalformedWitness(format!("{w} is not a positive word")));
            }
            for _ in 0..l.exp {
                letters.push((l.gen, Word::identity()));
            }
        }
        let mut injection = Vec::with_capacity(generators);
        for i in 1..=generators {
            let pos = letters
                .iter()
                .position(|(g, _)| *g == i)
                .ok_or_else(|| ConstructionError::MalformedWitness(format!("x{i} does not occur in {w}")))?;
            injection.push(pos + 1);
        }
        Ok(CentralWordWitness { letters, injection })
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// The word `x̄_1 ... x̄_M` over the source generators.
    pub fn word(&self) -> Word {
        self.letters.iter().fold(Word::identity(), |acc, (i, w)| acc.compose(&Word::gen(*i).conjugate(w)))
    }

    pub fn validate(&self, generators: usize) -> Result<(), ConstructionError> {
        let bad = |msg: String| Err(ConstructionError::MalformedWitness(msg));
        if self.injection.len() != generators {
            return bad(format!("injection covers {} of {generators} generators", self.injection.len()));
        }
        for (j, (i, w)) in self.letters.iter().enumerate() {
            if *i == 0 || *i > generators || w.max_generator() > generators {
                return bad(format!("position {} uses a generator outside 1..={generators}", j + 1));
            }
        }
        let mut used = vec![false; self.letters.len()];
        for (i, &pos) in self.injection.iter().enumerate() {
            if pos == 0 || pos > self.letters.len() {
                return bad(format!("position {pos} of x{} is out of range", i + 1));
            }
            if std::mem::replace(&mut used[pos - 1], true) {
                return bad(format!("position {pos} is used twice"));
            }
            let (target, conj) = &self.letters[pos - 1];
            if *target != i + 1 || !conj.is_identity() {
                return bad(format!("position {pos} is not the bare generator x{}", i + 1));
            }
        }
        Ok(())
    }

    fn is_standard(&self) -> bool {
        self.letters.iter().enumerate().all(|(j, (i, w))| *i == j + 1 && w.is_identity())
            && self.injection.iter().enumerate().all(|(i, &pos)| pos == i + 1)
    }
}

/// Expands `p` to a Hurwitz presentation whose degree is the witness
/// length: one new generator per non-injection position, conjugation
/// relations defining it, and the central relations for the full product.
///
/// The caller asserts that the witness word is central in `p`.
pub fn hurwitzify(
    p: &CPresentation,
    witness: &CentralWordWitness,
) -> Result<CPresentation, ConstructionError> {
    let n = p.generator_count();
    witness.validate(n)?;
    if witness.is_standard() && witness.degree() == n && p.is_standard_hurwitz() {
        return Ok(p.clone());
    }
    let big_m = witness.degree();
    let renumber = |g: usize| witness.injection[g - 1];
    let mut relations: Vec<CRelation> = p.relations().iter().map(|r| r.map_generators(renumber)).collect();
    let injected: Vec<bool> = {
        let mut v = vec![false; big_m];
        for &pos in &witness.injection {
            v[pos - 1] = true;
        }
        v
    };
    for (j, (i, w)) in witness.letters.iter().enumerate() {
        if !injected[j] {
            relations.push(CRelation::new(j + 1, renumber(*i), w.map_generators(renumber)));
        }
    }
    let mut out = CPresentation::new(big_m, relations)?.ensure_hurwitz();
    if let Some(l) = p.label() {
        out = out.with_label(format!("H({l})"));
    }
    Ok(out)
}

/// Hurwitzifies along the recorded central word when the Hurwitz degree
/// differs from the generator count.
pub fn standardize(p: &CPresentation) -> Result<CPresentation, ConstructionError> {
    let label = || p.label().unwrap_or("presentation").to_string();
    match (p.hurwitz_degree(), p.hurwitz_word()) {
        (None, _) => Err(ConstructionError::MissingHurwitzDegree(label())),
        (Some(_), None) => Ok(p.clone()),
        (Some(_), Some(w)) => {
            let witness = CentralWordWitness::from_positive_word(w, p.generator_count())?;
            hurwitzify(p, &witness)
        }
    }
}

/// `G_{n,m}` expanded to a Hurwitz presentation of degree `n m`.
pub fn torus6(n: usize, m: u32) -> CPresentation {
    standardize(&crate::braid::g_nm_presentation(n, m)).expect("positive central word")
}

/// The Hurwitz product `P1 ◇ P2`.
///
/// Generators: the first `m1 - 1` of `p1`, the first `m2 - 1` of `p2`,
/// then the shared last generator `c`. With `y_i` the product of all
/// generators of factor `i`, every non-shared generator of factor 1
/// commutes with `y_2^{m1}` and vice versa. The result has Hurwitz degree
/// `2 m1 m2` with central word `y_1^{m2} y_2^{m1}`.
pub fn hurwitz_product(p1: &CPresentation, p2: &CPresentation) -> Result<CPresentation, ConstructionError> {
    let p1 = standardize(p1)?;
    let p2 = standardize(p2)?;
    let (m1, m2) = (p1.generator_count(), p2.generator_count());
    let c = m1 + m2 - 1;
    let map1 = |g: usize| if g == m1 { c } else { g };
    let map2 = |g: usize| if g == m2 { c } else { m1 - 1 + g };
    let y1 = Word::product_range(1, m1).map_generators(map1);
    let y2 = Word::product_range(1, m2).map_generators(map2);
    let z1 = y2.pow(m1 as i64);
    let z2 = y1.pow(m2 as i64);

    let mut relations: Vec<CRelation> = p1.relations().iter().map(|r| r.map_generators(map1)).collect();
    relations.extend(p2.relations().iter().map(|r| r.map_generators(map2)));
    relations.extend((1..m1).map(|j| CRelation::commute(map1(j), z1.clone())));
    relations.extend((1..m2).map(|j| CRelation::commute(map2(j), z2.clone())));

    let central = y1.pow(m2 as i64).compose(&y2.pow(m1 as i64));
    let label = format!("{} ◇ {}", p1.label().unwrap_or("P1"), p2.label().unwrap_or("P2"));
    Ok(CPresentation::new(c, relations)?.with_hurwitz(2 * m1 * m2, Some(central))?.with_label(label))
}

/// `p ◇ p ◇ ... ◇ p` with `k` factors, folded from the left.
pub fn hurwitz_power(p: &CPresentation, k: usize) -> Result<CPresentation, ConstructionError> {
    assert!(k >= 1, "empty Hurwitz product");
    let mut acc = standardize(p)?;
    for _ in 1..k {
        acc = hurwitz_product(&acc, p)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::alexander_polynomial;
    use crate::braid::g_nm_presentation;
    use crate::words::tests::w;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(0, c)
    }

    fn delta(q: &CPresentation) -> LaurentPoly {
        alexander_polynomial(q).canonical
    }

    #[test]
    fn universal_small_cases() {
        assert_eq!(delta(&universal_hurwitz(3)), p(&[1, -1, 0, -1, 1]));
        assert_eq!(delta(&universal_hurwitz(2)), p(&[-1, 1]));
        for m in 2..=5 {
            assert_eq!(universal_hurwitz(m).components(), m);
        }
        assert_eq!(universal_hurwitz(4).ensure_hurwitz(), universal_hurwitz(4));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(universal_char_oracle(2), p(&[-1, 1]));
        assert_eq!(universal_char_oracle(3), p(&[1, -1, 0, -1, 1]));
        let o4 = universal_char_oracle(4);
        assert_eq!(o4.span(), Some(9));
        let t4 = LaurentPoly::monomial(1.into(), 4) - LaurentPoly::one();
        assert_eq!(o4, &p(&[-1, 1]) * &t4.pow(2));
    }

    #[test]
    fn abelian_groups() {
        assert!(delta(&abelian_cgroup(1)).is_one());
        assert_eq!(delta(&abelian_cgroup(2)), p(&[-1, 1]));
        assert_eq!(delta(&abelian_cgroup(4)), p(&[-1, 1]).pow(3));
        assert_eq!(abelian_cgroup(3).relations().len(), 6);
    }

    #[test]
    fn g2_is_the_text() {
        let g = g2_presentation();
        assert_eq!(g.relations().len(), 7);
        assert_eq!(g.label(), Some("G(2)"));
        assert_eq!(delta(&g), p(&[-1, 0, 1]));
        assert_eq!(g.components(), 2);
    }

    #[test]
    fn witness_from_torus_word() {
        let wit = CentralWordWitness::from_positive_word(&w("(x1 x2)^3"), 2).unwrap();
        assert_eq!(wit.degree(), 6);
        assert_eq!(wit.injection, vec![1, 2]);
        assert_eq!(wit.word(), w("(x1 x2)^3"));
        assert!(CentralWordWitness::from_positive_word(&w("x1^3"), 2).is_err());
        assert!(CentralWordWitness::from_positive_word(&w("x1 x2^-1"), 2).is_err());
    }

    #[test]
    fn malformed_witnesses() {
        let g = g_nm_presentation(2, 3);
        let missing = CentralWordWitness { letters: vec![(1, Word::identity()); 6], injection: vec![1] };
        assert!(matches!(hurwitzify(&g, &missing), Err(ConstructionError::MalformedWitness(_))));
        let twice = CentralWordWitness {
            letters: vec![(1, Word::identity()), (2, Word::identity())],
            injection: vec![1, 1],
        };
        assert!(hurwitzify(&g, &twice).is_err());
        let conj =
            CentralWordWitness { letters: vec![(1, w("x2")), (2, Word::identity())], injection: vec![1, 2] };
        assert!(hurwitzify(&g, &conj).is_err());
    }

    #[test]
    fn hurwitzify_torus() {
        let h = torus6(2, 3);
        assert_eq!(h.generator_count(), 6);
        assert_eq!(h.hurwitz_degree(), Some(6));
        assert!(h.is_standard_hurwitz());
        assert_eq!(h.relations().len(), 2 + 4 + 6);
        assert_eq!(h.components(), 1);
        assert_eq!(delta(&h), p(&[1, -1, 1]));
        assert_eq!(h.label(), Some("H(G_{2,3})"));
    }

    #[test]
    fn hurwitzify_standard_is_identity() {
        let z2 = abelian_cgroup(2);
        let wit = CentralWordWitness::from_positive_word(&w("x1 x2"), 2).unwrap();
        assert_eq!(hurwitzify(&z2, &wit).unwrap(), z2);
    }

    #[test]
    fn products() {
        let z2 = abelian_cgroup(2);
        let zz = hurwitz_product(&z2, &z2).unwrap();
        assert_eq!(zz.generator_count(), 3);
        assert_eq!(zz.hurwitz_degree(), Some(8));
        assert_eq!(zz.label(), Some("Z^2 ◇ Z^2"));
        assert_eq!(zz.components(), 3);
        assert_eq!(delta(&zz), p(&[-1, 1]).pow(2));

        let gz = hurwitz_product(&g2_presentation(), &z2).unwrap();
        assert_eq!(delta(&gz), &p(&[-1, 1]).pow(2) * &p(&[1, 1]));
        assert_eq!(gz.components(), 3);

        let f2 = CPresentation::new(2, vec![]).unwrap();
        assert!(matches!(hurwitz_product(&f2, &z2), Err(ConstructionError::MissingHurwitzDegree(_))));
    }

    #[test]
    fn product_central_word() {
        let zz = hurwitz_product(&abelian_cgroup(2), &abelian_cgroup(2)).unwrap();
        // y1 = x1 x3, y2 = x2 x3
        assert_eq!(zz.hurwitz_word(), Some(&w("(x1 x3)^2 (x2 x3)^2")));
        let again = standardize(&zz).unwrap();
        assert_eq!(again.generator_count(), 8);
        assert_eq!(delta(&again), delta(&zz));
    }
}
