//! Alexander matrices, minor GCDs and the structural checks on the result.

mod matrix;
mod minors;
pub mod verify;

use serde::{Deserialize, Serialize};

use crate::laurent::{factor_cyclotomic, CyclotomicFactorization, LaurentPoly, Unit};
use crate::presentation::CPresentation;

pub use matrix::{build_matrix, AlexanderMatrix};
pub use minors::{determinant, minor_gcd, minor_gcd_parallel};
pub use verify::{verify, Check, CheckReport};

/// Above this many columns the minor enumeration always runs on the
/// unit-pivot reduced matrix.
pub const MANDATORY_SIMPLIFY_COLUMNS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub simplify: bool,
    pub parallel: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { simplify: true, parallel: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub d: u64,
    pub mult: u32,
}

/// Alexander polynomial of a presentation with its cyclotomic
/// factorization and the structural checks.
///
/// `unit` relates the canonical form to the characteristic-polynomial
/// normalization: `unit * canonical` has leading term `(-t)^deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderResult {
    pub label: Option<String>,
    pub canonical: LaurentPoly,
    pub unit: Unit,
    /// `None` when `Delta = 0`.
    pub factorization: Option<CyclotomicFactorization>,
    pub generators: usize,
    pub components: usize,
    pub hurwitz_degree: Option<usize>,
    pub checks: CheckReport,
}

impl AlexanderResult {
    /// Assembles a result from a polynomial and presentation metadata; the
    /// checks are recomputed.
    pub fn from_parts(
        delta: &LaurentPoly,
        label: Option<String>,
        generators: usize,
        components: usize,
        hurwitz_degree: Option<usize>,
    ) -> Self {
        let canonical = delta.canonical();
        let factorization = factor_cyclotomic(&canonical).ok();
        let sign = match canonical.span() {
            Some(d) if d % 2 == 1 => -1,
            _ => 1,
        };
        let checks = verify(&canonical, hurwitz_degree, components);
        AlexanderResult {
            label,
            canonical,
            unit: Unit { sign, t_shift: 0 },
            factorization,
            generators,
            components,
            hurwitz_degree,
            checks,
        }
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.factorization.as_ref().is_some_and(CyclotomicFactorization::is_cyclotomic)
    }

    /// The polynomial in the characteristic-polynomial normalization.
    pub fn characteristic_view(&self) -> LaurentPoly {
        &self.unit.to_poly() * &self.canonical
    }
}

pub fn alexander_polynomial(p: &CPresentation) -> AlexanderResult {
    alexander_polynomial_with(p, PipelineOptions::default())
}

/// build, simplify, minor GCD, canonicalize, factor, verify.
pub fn alexander_polynomial_with(p: &CPresentation, opts: PipelineOptions) -> AlexanderResult {
    let delta = delta_with(p, opts);
    AlexanderResult::from_parts(
        &delta,
        p.label().map(str::to_string),
        p.generator_count(),
        p.components(),
        p.hurwitz_degree(),
    )
}

/// Canonical minor GCD of the presentation's Alexander matrix.
pub fn delta_with(p: &CPresentation, opts: PipelineOptions) -> LaurentPoly {
    let mut mat = build_matrix(p);
    if opts.simplify || mat.col_count() > MANDATORY_SIMPLIFY_COLUMNS {
        mat = mat.simplify_unit_pivots();
    }
    if opts.parallel {
        minor_gcd_parallel(&mat)
    } else {
        minor_gcd(&mat)
    }
}

#[derive(Serialize, Deserialize)]
struct ResultRepr {
    label: Option<String>,
    polynomial: String,
    canonical: Vec<serde_json::Number>,
    unit: Unit,
    factors: Vec<Factor>,
    residual: Option<Vec<serde_json::Number>>,
    generators: usize,
    components: usize,
    hurwitz_degree: Option<usize>,
    checks: CheckReport,
}

impl Serialize for AlexanderResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (factors, residual) = match &self.factorization {
            Some(f) => (
                f.factors.iter().map(|&(d, mult)| Factor { d, mult }).collect(),
                f.residual.as_ref().map(LaurentPoly::coeff_numbers),
            ),
            None => (Vec::new(), None),
        };
        ResultRepr {
            label: self.label.clone(),
            polynomial: self.canonical.to_string(),
            canonical: self.canonical.coeff_numbers(),
            unit: self.unit,
            factors,
            residual,
            generators: self.generators,
            components: self.components,
            hurwitz_degree: self.hurwitz_degree,
            checks: self.checks.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlexanderResult {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = ResultRepr::deserialize(deserializer)?;
        let canonical = LaurentPoly::from_numbers(0, &repr.canonical).map_err(D::Error::custom)?;
        if !canonical.is_zero() && !canonical.is_canonical() {
            return Err(D::Error::custom("polynomial is not in canonical form"));
        }
        let factorization = if canonical.is_zero() {
            None
        } else {
            let residual = repr
                .residual
                .map(|r| LaurentPoly::from_numbers(0, &r))
                .transpose()
                .map_err(D::Error::custom)?;
            Some(CyclotomicFactorization {
                unit: Unit::ONE,
                factors: repr.factors.iter().map(|f| (f.d, f.mult)).collect(),
                residual,
            })
        };
        Ok(AlexanderResult {
            label: repr.label,
            canonical,
            unit: repr.unit,
            factorization,
            generators: repr.generators,
            components: repr.components,
            hurwitz_degree: repr.hurwitz_degree,
            checks: repr.checks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse, CRelation};
    use crate::words::tests::w;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(0, c)
    }

    const G2: &str = "label: G(2)\ngenerators: 4\nhurwitz_degree: 4\n\
        rel: x4 = x2^2 x1 x2^-2\nrel: x3 = x2\nrel: x2 = x4^2 x2 x4^-2\ncentral: x1 x2 x3 x4\n";

    #[test]
    fn z2_delta() {
        let z2 = CPresentation::new(2, vec![CRelation::commute(1, w("x2"))]).unwrap();
        let r = alexander_polynomial(&z2);
        assert_eq!(r.canonical, p(&[-1, 1]));
        assert_eq!(r.components, 2);
        assert!(r.checks.all_pass());
    }

    #[test]
    fn g2_delta_with_and_without_pivots() {
        let g2 = parse(G2).unwrap();
        for simplify in [true, false] {
            for parallel in [true, false] {
                let d = delta_with(&g2, PipelineOptions { simplify, parallel });
                assert_eq!(d, p(&[-1, 0, 1]));
            }
        }
        let r = alexander_polynomial(&g2);
        assert_eq!(r.factorization.as_ref().unwrap().factors, vec![(1, 1), (2, 1)]);
        assert!(r.checks.all_pass(), "{:?}", r.checks);
    }

    #[test]
    fn two_strand_relator_series() {
        for m in 1..=6i64 {
            let g = parse(&format!("generators: 2\nrel: x1 = (x1 x2)^-{m} x1 (x1 x2)^{m}\n")).unwrap();
            let want = (p(&[1, -1]) * LaurentPoly::geometric(0, 2, m as usize, 1)).canonical();
            assert_eq!(alexander_polynomial(&g).canonical, want, "m = {m}");
        }
    }

    #[test]
    fn json_round_trip() {
        let r = alexander_polynomial(&parse(G2).unwrap());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["canonical"], serde_json::json!([-1, 0, 1]));
        assert_eq!(v["factors"], serde_json::json!([{"d": 1, "mult": 1}, {"d": 2, "mult": 1}]));
        assert_eq!(v["unit"], serde_json::json!({"sign": 1, "t_power": 0}));
        assert_eq!(v["label"], "G(2)");
        assert_eq!(v["polynomial"], "t^2 - 1");
        let back: AlexanderResult = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn zero_delta_is_reported() {
        // free group of rank 2
        let f2 = CPresentation::new(2, vec![]).unwrap();
        let r = alexander_polynomial(&f2);
        assert!(r.canonical.is_zero());
        assert!(r.factorization.is_none());
        let back: AlexanderResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
