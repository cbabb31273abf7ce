//! GCD in `Z[t, t^-1]` via the primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LaurentPoly;

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x / &c).collect()
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (dense ascending, `b` nonzero):
/// `lc(b)^k * a = q * b + r` with `deg r < deg b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    trim(&mut r);
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor, returned in canonical form (nonzero constant
/// term, positive leading coefficient). `gcd(p, 0)` is `p` canonicalized and
/// `gcd(0, 0)` is zero.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return LaurentPoly::zero(),
        (true, false) => return b.canonical(),
        (false, true) => return a.canonical(),
        _ => {}
    }
    if a.is_unit() || b.is_unit() {
        return LaurentPoly::one();
    }
    // coefficient vectors already start with a nonzero entry: the t-power is
    // stripped by ignoring the stored lowest exponent
    let ca = content(a.coeffs());
    let cb = content(b.coeffs());
    let c = ca.gcd(&cb);

    let mut x = primitive_part(a.coeffs());
    let mut y = primitive_part(b.coeffs());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
        if y.is_empty() {
            break;
        }
    }
    let g = if y.is_empty() {
        x
    } else {
        // nonzero constant remainder: primitive parts are coprime
        vec![BigInt::from(1)]
    };
    let mut g: Vec<BigInt> = g.iter().map(|v| v * &c).collect();
    if g.last().unwrap().is_negative() {
        for v in g.iter_mut() {
            *v = -&*v;
        }
    }
    LaurentPoly::new(0, g).canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::tests::arb_poly;
    use proptest::prelude::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    #[test]
    fn small_cases() {
        assert_eq!(gcd(&p(0, &[-1, 0, 1]), &p(0, &[-1, 0, 0, 1])), p(0, &[-1, 1]));
        let q = p(-3, &[2, -4, 6]);
        assert_eq!(gcd(&q, &LaurentPoly::zero()), p(0, &[2, -4, 6]));
        assert_eq!(gcd(&p(0, &[6]), &p(0, &[4, 2])), p(0, &[2]));
        assert_eq!(gcd(&p(2, &[1]), &p(0, &[3, 1])), LaurentPoly::one());
    }

    #[test]
    fn alternating_entries_of_the_two_strand_torus_link() {
        // derivatives of (x1 x2)^2 (x2 x1)^-2: 1 + t^2 - t^3 - t and t + t^3 - t^2 - 1
        let a = p(0, &[1, -1, 1, -1]);
        let b = p(0, &[-1, 1, -1, 1]);
        assert_eq!(gcd(&a, &b), p(0, &[-1, 1, -1, 1]));
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = gcd(&a, &b);
            prop_assert!(g.is_canonical());
            prop_assert!(a.exact_div(&g).is_ok());
            prop_assert!(b.exact_div(&g).is_ok());
        }

        #[test]
        fn gcd_scales_with_common_factor(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()) && !c.is_zero());
            let lhs = gcd(&(&a * &c), &(&b * &c));
            let rhs = (&gcd(&a, &b) * &c).canonical();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
