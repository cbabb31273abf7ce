use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::{
    factor_cyclotomic, is_reciprocal, prime_power_base, CyclotomicFactorization, LaurentPoly,
};

/// Above this `m (m - 1)` the divisibility check uses multiplicities instead
/// of building `(t - 1)(t^m - 1)^(m - 2)`.
const EXACT_DIVISION_LIMIT: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Check { pass, detail: detail.into() }
    }

    fn skipped(why: impl Into<String>) -> Self {
        Check { pass: true, detail: format!("not applicable: {}", why.into()) }
    }
}

/// Named structural checks. Keys sort in the order the checks are listed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub checks: BTreeMap<String, Check>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Check)> {
        self.checks.iter().filter(|(_, c)| !c.pass).map(|(k, c)| (k.as_str(), c))
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.get(name)
    }

    fn put(&mut self, name: &str, check: Check) {
        self.checks.insert(name.to_string(), check);
    }
}

pub const CONSTANT_TERM: &str = "a_constant_term";
pub const ROOTS_OF_UNITY: &str = "b_roots_of_unity";
pub const DIVIDES_UNIVERSAL: &str = "c_divides_universal";
pub const PHI1_MULTIPLICITY: &str = "d_phi1_multiplicity";
pub const IRREDUCIBLE_SYMMETRY: &str = "e_irreducible_symmetry";
pub const PRIME_POWER_TRIVIAL: &str = "f_prime_power_trivial";
pub const CONSTANT_SIGN: &str = "g_constant_sign";

/// `(t - 1)(t^m - 1)^(m - 2)`, or 1 when `m = 1`.
pub fn universal_bound(m: usize) -> LaurentPoly {
    if m <= 1 {
        return LaurentPoly::one();
    }
    let e = m - 2;
    let mut coeffs = vec![BigInt::zero(); m * e + 1];
    for k in 0..=e {
        let c = binomial(BigInt::from(e), BigInt::from(k));
        coeffs[m * k] = if (e - k) % 2 == 1 { -c } else { c };
    }
    &LaurentPoly::new(0, coeffs) * &LaurentPoly::from_i64s(0, &[-1, 1])
}

/// Runs every check on a canonical Alexander polynomial given the Hurwitz
/// degree `m` (if any) and the number of components `k`.
///
/// Without a Hurwitz degree only the Φ1 multiplicity is checked, in its
/// weak form `mult >= k - 1`.
pub fn verify(delta: &LaurentPoly, hurwitz_degree: Option<usize>, components: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let k = components;
    let fact = factor_cyclotomic(delta).ok();

    let Some(m) = hurwitz_degree else {
        for name in [
            CONSTANT_TERM,
            ROOTS_OF_UNITY,
            DIVIDES_UNIVERSAL,
            IRREDUCIBLE_SYMMETRY,
            PRIME_POWER_TRIVIAL,
            CONSTANT_SIGN,
        ] {
            report.put(name, Check::skipped("no Hurwitz degree"));
        }
        report.put(PHI1_MULTIPLICITY, phi1_check(fact.as_ref(), k, false));
        return report;
    };

    let Some(fact) = fact else {
        for name in [
            CONSTANT_TERM,
            ROOTS_OF_UNITY,
            DIVIDES_UNIVERSAL,
            PHI1_MULTIPLICITY,
            IRREDUCIBLE_SYMMETRY,
            PRIME_POWER_TRIVIAL,
            CONSTANT_SIGN,
        ] {
            report.put(name, Check::new(false, "Delta = 0"));
        }
        return report;
    };

    let c0 = delta.coeff(0);
    report.put(CONSTANT_TERM, Check::new(c0.abs().is_one(), format!("|Delta(0)| = {}", c0.abs())));

    let stray: Vec<u64> =
        fact.factors.iter().map(|&(d, _)| d).filter(|d| !(m as u64).is_multiple_of(*d)).collect();
    report.put(
        ROOTS_OF_UNITY,
        match (&fact.residual, stray.is_empty()) {
            (Some(r), _) => Check::new(false, format!("non-cyclotomic residual {r}")),
            (None, true) => Check::new(true, format!("every factor index divides {m}")),
            (None, false) => Check::new(false, format!("factor indices {stray:?} do not divide {m}")),
        },
    );

    report.put(DIVIDES_UNIVERSAL, divides_universal(delta, &fact, m));
    report.put(PHI1_MULTIPLICITY, phi1_check(Some(&fact), k, true));

    if k == 1 {
        let deg = delta.span().unwrap();
        let at_one = delta.eval_at_one();
        let pass = is_reciprocal(delta) && deg.is_multiple_of(2) && at_one.is_one();
        report.put(
            IRREDUCIBLE_SYMMETRY,
            Check::new(
                pass,
                format!("reciprocal: {}, degree {deg}, Delta(1) = {at_one}", is_reciprocal(delta)),
            ),
        );
        match prime_power_base(m as u64) {
            Some(p) => report.put(
                PRIME_POWER_TRIVIAL,
                Check::new(delta.is_one(), format!("m = {m} is a power of {p}; Delta = {delta}")),
            ),
            None => report.put(PRIME_POWER_TRIVIAL, Check::skipped(format!("m = {m} is not a prime power"))),
        }
    } else {
        report.put(IRREDUCIBLE_SYMMETRY, Check::skipped(format!("k = {k}")));
        report.put(PRIME_POWER_TRIVIAL, Check::skipped(format!("k = {k}")));
    }

    // canonical form makes the leading coefficient +1, so the sign rule
    // reads Delta(0) = (-1)^(k-1); the characteristic view carries (-1)^deg
    let expected = if (k - 1).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let deg = delta.span().unwrap();
    let view0 = delta.characteristic_sign_view().coeff(0);
    report.put(
        CONSTANT_SIGN,
        Check::new(
            c0 == expected,
            format!(
                "Delta(0) = {c0}, characteristic view Delta(0) = {view0}, deg - (k-1) = {}",
                deg as i64 - (k as i64 - 1)
            ),
        ),
    );
    report
}

fn phi1_check(fact: Option<&CyclotomicFactorization>, k: usize, exact: bool) -> Check {
    let Some(fact) = fact else {
        return Check::new(false, "Delta = 0");
    };
    let mult = fact.multiplicity(1) as usize;
    let want = k.saturating_sub(1);
    if exact {
        Check::new(mult == want, format!("mult Phi_1 = {mult}, k - 1 = {want}"))
    } else {
        Check::new(mult >= want, format!("mult Phi_1 = {mult} >= k - 1 = {want}"))
    }
}

fn divides_universal(delta: &LaurentPoly, fact: &CyclotomicFactorization, m: usize) -> Check {
    if m * m.saturating_sub(1) <= EXACT_DIVISION_LIMIT {
        let bound = universal_bound(m);
        return match bound.exact_div(delta) {
            Ok(_) => {
                Check::new(true, format!("exact division of (t-1)(t^{m}-1)^{} succeeds", m.saturating_sub(2)))
            }
            Err(_) => {
                Check::new(false, format!("Delta does not divide (t-1)(t^{m}-1)^{}", m.saturating_sub(2)))
            }
        };
    }
    // t^m - 1 is squarefree, so divisibility is a bound on each multiplicity
    if let Some(r) = &fact.residual {
        return Check::new(false, format!("non-cyclotomic residual {r}"));
    }
    let bad: Vec<(u64, u32)> =
        fact.factors
            .iter()
            .copied()
            .filter(|&(d, e)| {
                if d == 1 {
                    e as usize > m - 1
                } else {
                    !(m as u64).is_multiple_of(d) || e as usize > m - 2
                }
            })
            .collect();
    Check::new(bad.is_empty(), format!("multiplicity criterion, offending factors {bad:?}"))
}
