//! First Betti numbers of cyclic branched coverings, read off the
//! cyclotomic factorization of the Alexander polynomial.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{euler_phi, CyclotomicFactorization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("factorization has a non-cyclotomic residual")]
    ResidualPresent,
    #[error("covering degree must be positive")]
    ZeroDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub n: u64,
    /// Roots of `Delta` that are `n`-th roots of unity other than 1.
    pub b1: u64,
    /// Roots of `Delta` that are `n`-th roots of unity.
    pub r_n: u64,
    pub affine_h1_dim: u64,
    pub components: u64,
}

/// Betti numbers of the `n`-sheeted cyclic covering.
pub fn betti_b1(f: &CyclotomicFactorization, n: u64) -> Result<BettiReport, CoveringError> {
    if n == 0 {
        return Err(CoveringError::ZeroDegree);
    }
    if f.residual.is_some() {
        return Err(CoveringError::ResidualPresent);
    }
    let b1: u64 = f
        .factors
        .iter()
        .filter(|&&(d, _)| d > 1 && n.is_multiple_of(d))
        .map(|&(d, mult)| mult as u64 * euler_phi(d))
        .sum();
    let phi1 = f.multiplicity(1) as u64;
    let r_n = b1 + phi1;
    Ok(BettiReport { n, b1, r_n, affine_h1_dim: r_n + 1, components: phi1 + 1 })
}

/// Number of irreducible components: multiplicity of `Phi_1` plus one.
pub fn components_from_delta(f: &CyclotomicFactorization) -> Result<usize, CoveringError> {
    if f.residual.is_some() {
        return Err(CoveringError::ResidualPresent);
    }
    Ok(f.multiplicity(1) as usize + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{LaurentPoly, Unit};
    use proptest::prelude::*;

    fn fact(factors: &[(u64, u32)]) -> CyclotomicFactorization {
        CyclotomicFactorization { unit: Unit::ONE, factors: factors.to_vec(), residual: None }
    }

    #[test]
    fn sextic_family() {
        for k in 1..=5u32 {
            assert_eq!(betti_b1(&fact(&[(6, k)]), 6).unwrap().b1, 2 * k as u64);
            let r = betti_b1(&fact(&[(1, k), (2, k)]), 2).unwrap();
            assert_eq!(r.b1, k as u64);
            assert_eq!(r.r_n, 2 * k as u64);
            assert_eq!(r.affine_h1_dim, 2 * k as u64 + 1);
            assert_eq!(r.components, k as u64 + 1);
        }
        assert_eq!(betti_b1(&fact(&[(6, 1)]), 5).unwrap().b1, 0);
    }

    #[test]
    fn components() {
        assert_eq!(components_from_delta(&fact(&[(1, 1), (2, 1)])), Ok(2));
        assert_eq!(components_from_delta(&fact(&[(6, 1)])), Ok(1));
        assert_eq!(components_from_delta(&fact(&[(1, 2), (3, 1)])), Ok(3));
    }

    #[test]
    fn residual_is_rejected() {
        let mut f = fact(&[(1, 1)]);
        f.residual = Some(LaurentPoly::from_i64s(0, &[-2, 1]));
        assert_eq!(betti_b1(&f, 2), Err(CoveringError::ResidualPresent));
        assert_eq!(components_from_delta(&f), Err(CoveringError::ResidualPresent));
        assert_eq!(betti_b1(&fact(&[]), 0), Err(CoveringError::ZeroDegree));
    }

    #[test]
    fn json_shape() {
        let r = betti_b1(&fact(&[(6, 1)]), 6).unwrap();
        assert_eq!(
            serde_json::to_value(r).unwrap(),
            serde_json::json!({"n": 6, "b1": 2, "r_n": 2, "affine_h1_dim": 3, "components": 1})
        );
    }

    fn arb_fact() -> impl Strategy<Value = CyclotomicFactorization> {
        prop::collection::btree_map(1u64..40, 1u32..4, 0..5)
            .prop_map(|m| fact(&m.into_iter().collect::<Vec<_>>()))
    }

    proptest! {
        #[test]
        fn monotone_under_divisibility(f in arb_fact(), n in 1u64..30, k in 1u64..5) {
            prop_assert!(betti_b1(&f, n).unwrap().b1 <= betti_b1(&f, n * k).unwrap().b1);
        }

        #[test]
        fn full_multiple_sees_every_root(f in arb_fact()) {
            let n = f.factors.iter().fold(1u64, |acc, &(d, _)| num_integer::lcm(acc, d));
            let k = f.multiplicity(1) as u64;
            prop_assert_eq!(betti_b1(&f, n).unwrap().b1, f.degree() - k);
        }

        #[test]
        fn irreducible_gives_even_b1(f in arb_fact(), n in 1u64..60) {
            // no Phi_1 and no Phi_2
            let f = fact(&f.factors.iter().copied().filter(|&(d, _)| d > 2).collect::<Vec<_>>());
            prop_assert_eq!(betti_b1(&f, n).unwrap().b1 % 2, 0);
        }
    }
}
