//! Cyclotomic polynomials and cyclotomic trial factorization.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{LaurentError, LaurentPoly, Unit};

static CYCLOTOMIC_CACHE: OnceLock<Mutex<HashMap<u64, LaurentPoly>>> = OnceLock::new();

fn cache() -> &'static Mutex<HashMap<u64, LaurentPoly>> {
    CYCLOTOMIC_CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn proper_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out.pop();
    out
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi of zero");
    factorize(n).into_iter().fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// The prime `p` when `n = p^k` with `k >= 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// The `d`-th cyclotomic polynomial, memoized.
///
/// `Phi_1 = t - 1`; for `d > 1` the geometric sum `1 + t + ... + t^(d-1)` is
/// divided exactly by `Phi_e` for every divisor `1 < e < d`.
pub fn cyclotomic(d: u64) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let phi = if d == 1 {
        LaurentPoly::from_i64s(0, &[-1, 1])
    } else {
        let mut acc = LaurentPoly::geometric(0, 1, d as usize, 1);
        for e in proper_divisors(d).into_iter().filter(|&e| e > 1) {
            acc = acc.exact_div(&cyclotomic(e)).expect("cyclotomic recursion divides exactly");
        }
        acc
    };
    cache().lock().unwrap().entry(d).or_insert(phi).clone()
}

/// `sign * t^t_shift * prod Phi_d^mult`, possibly times a residual that has
/// no cyclotomic factor left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicFactorization {
    pub unit: Unit,
    /// `(d, multiplicity)` sorted by `d`.
    pub factors: Vec<(u64, u32)>,
    /// Non-unit cofactor after trial division; `None` when fully cyclotomic.
    pub residual: Option<LaurentPoly>,
}

impl CyclotomicFactorization {
    pub fn is_cyclotomic(&self) -> bool {
        self.residual.is_none()
    }

    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.iter().find(|(e, _)| *e == d).map(|(_, m)| *m).unwrap_or(0)
    }

    /// Degree of the cyclotomic part.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(d, m)| euler_phi(d) * m as u64).sum()
    }

    pub fn reconstruct(&self) -> LaurentPoly {
        let mut acc = self.unit.to_poly();
        for &(d, m) in &self.factors {
            acc = &acc * &cyclotomic(d).pow(m);
        }
        if let Some(r) = &self.residual {
            acc = &acc * r;
        }
        acc
    }
}

/// Factors `p` into a unit and cyclotomic polynomials by trial division over
/// every `d <= 2 deg^2 + 1` with `phi(d) <= deg`. Anything left over is
/// reported as the residual.
pub fn factor_cyclotomic(p: &LaurentPoly) -> Result<CyclotomicFactorization, LaurentError> {
    let (mut q, unit) = p.canonicalize()?;
    let deg = q.span().unwrap() as u64;
    let bound = 2 * deg * deg + 1;
    let mut factors = Vec::new();
    for d in 1..=bound {
        let cur = q.span().unwrap() as u64;
        if cur == 0 {
            break;
        }
        if euler_phi(d) > cur {
            continue;
        }
        let phi = cyclotomic(d);
        let mut mult = 0;
        while let Ok(next) = q.exact_div(&phi) {
            q = next;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
        }
    }
    let residual = (!q.is_one()).then_some(q);
    Ok(CyclotomicFactorization { unit, factors, residual })
}

/// Palindromic coefficient list, i.e. `p(t) = t^deg p(1/t)` for canonical `p`.
pub fn is_reciprocal(p: &LaurentPoly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}
