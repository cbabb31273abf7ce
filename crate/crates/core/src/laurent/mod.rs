//! Exact integer Laurent polynomials in one variable `t`.
//!
//! A [`LaurentPoly`] stores a dense coefficient vector together with the
//! exponent of its first entry. Both ends of the vector are kept nonzero, so
//! every element of `Z[t, t^-1]` has exactly one representation and derived
//! equality is mathematical equality.

mod cyclotomic;
mod gcd;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use cyclotomic::{
    cyclotomic, euler_phi, factor_cyclotomic, is_reciprocal, prime_power_base, CyclotomicFactorization,
};
pub use gcd::gcd;
pub use text::ParsePolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("the zero polynomial has no canonical form")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NonDivisible { dividend: String, divisor: String },
}

/// The unit `sign * t^t_shift` of `Z[t, t^-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unit {
    pub sign: i32,
    #[serde(rename = "t_power")]
    pub t_shift: i64,
}

impl Unit {
    pub const ONE: Unit = Unit { sign: 1, t_shift: 0 };

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(BigInt::from(self.sign), self.t_shift)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // exponent of coeffs[0]; zero for the zero polynomial
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// Builds `sum_i coeffs[i] * t^(low + i)`, trimming zeros at both ends.
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `t^start + t^(start+step) + ... ` with `count` terms and the given sign.
    pub fn geometric(start: i64, step: i64, count: usize, sign: i64) -> Self {
        let mut acc = LaurentPoly::zero();
        for k in 0..count as i64 {
            acc += &LaurentPoly::monomial(BigInt::from(sign), start + k * step);
        }
        acc
    }

    fn normalize(&mut self) {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trailing);
        let leading = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading > 0 {
            self.coeffs.drain(..leading);
            self.low += leading as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for the units `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn highest_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Highest exponent minus lowest exponent; the degree of the canonical form.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at an integer point; `None` when negative exponents are present
    /// and the point is not a unit.
    pub fn eval(&self, x: &BigInt) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.low < 0 && !x.abs().is_one() {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let k = self.low;
        let xk = if k >= 0 {
            num_traits::pow(x.clone(), k as usize)
        } else {
            // x is ±1 here
            num_traits::pow(x.clone(), (-k) as usize)
        };
        Some(acc * xk)
    }

    /// Splits off the unit: `self = sign * t^t_shift * q` with `q` in `Z[t]`,
    /// `q(0) != 0` and positive leading coefficient.
    pub fn canonicalize(&self) -> Result<(LaurentPoly, Unit), LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let sign = if self.coeffs.last().unwrap().is_negative() { -1 } else { 1 };
        let coeffs = if sign < 0 { self.coeffs.iter().map(|c| -c).collect() } else { self.coeffs.clone() };
        Ok((LaurentPoly { low: 0, coeffs }, Unit { sign, t_shift: self.low }))
    }

    /// Canonical part, with zero mapped to zero.
    pub fn canonical(&self) -> LaurentPoly {
        self.canonicalize().map(|(q, _)| q).unwrap_or_else(|_| Self::zero())
    }

    pub fn is_canonical(&self) -> bool {
        !self.is_zero() && self.low == 0 && self.coeffs.last().unwrap().is_positive()
    }

    /// Canonical form times `(-1)^deg`, the normalization of `det(h - t Id)`
    /// whose leading term is `(-t)^deg`.
    pub fn characteristic_sign_view(&self) -> LaurentPoly {
        let q = self.canonical();
        match q.span() {
            Some(d) if d % 2 == 1 => -q,
            _ => q,
        }
    }

    /// Exact division in `Z[t, t^-1]`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let quotient = poly_exact_div(&self.coeffs, &divisor.coeffs).ok_or_else(|| {
            LaurentError::NonDivisible { dividend: self.to_string(), divisor: divisor.to_string() }
        })?;
        Ok(LaurentPoly::new(self.low - divisor.low, quotient))
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        !self.is_zero() && other.exact_div(self).is_ok()
    }

    /// Sum of a sequence of polynomials.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for p in items {
            acc += p;
        }
        acc
    }
}

/// Exact division of dense `Z[t]` coefficient vectors (ascending order).
/// Both inputs are assumed to have a nonzero constant and leading term
/// except for trailing/leading structure handled by the caller.
pub(crate) fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if num.len() < den.len() {
        return None;
    }
    let lead = den.last().unwrap();
    let mut rem: Vec<BigInt> = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let top = &rem[k + den.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[k + i] -= &q * d;
            }
        }
        quot[k] = q;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn add_into(acc: &mut LaurentPoly, rhs: &LaurentPoly, negate: bool) {
    if rhs.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if negate { -rhs } else { rhs.clone() };
        return;
    }
    let low = acc.low.min(rhs.low);
    let high = acc.highest_exponent().unwrap().max(rhs.highest_exponent().unwrap());
    let len = (high - low + 1) as usize;
    if low < acc.low {
        let pad = (acc.low - low) as usize;
        let mut v = vec![BigInt::zero(); pad];
        v.append(&mut acc.coeffs);
        acc.coeffs = v;
        acc.low = low;
    }
    acc.coeffs.resize(len, BigInt::zero());
    let offset = (rhs.low - low) as usize;
    for (i, c) in rhs.coeffs.iter().enumerate() {
        if negate {
            acc.coeffs[offset + i] -= c;
        } else {
            acc.coeffs[offset + i] += c;
        }
    }
    acc.normalize();
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::new(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by span first, then lexicographically; only used for stable sorting.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then(self.low.cmp(&other.low))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    lowest: i64,
    coeffs: Vec<serde_json::Number>,
}

impl LaurentPoly {
    /// Coefficients as exact JSON numbers, lowest exponent first.
    pub(crate) fn coeff_numbers(&self) -> Vec<serde_json::Number> {
        self.coeffs
            .iter()
            .map(|c| c.to_string().parse::<serde_json::Number>().expect("integer literal"))
            .collect()
    }

    pub(crate) fn from_numbers(low: i64, numbers: &[serde_json::Number]) -> Result<Self, String> {
        let coeffs = numbers
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(|_| format!("non-integer coefficient {n}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::new(low, coeffs))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LaurentRepr { lowest: self.low, coeffs: self.coeff_numbers() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(deserializer)?;
        LaurentPoly::from_numbers(repr.lowest, &repr.coeffs).map_err(serde::de::Error::custom)
    }
}
