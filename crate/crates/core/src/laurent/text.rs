//! Text form of Laurent polynomials: `t^3 - 2*t + 1 - t^-1`.
//!
//! Terms appear in descending exponent order. A coefficient of `±1` is
//! omitted on non-constant terms; otherwise it is joined to the power with `*`.
//! The parser also accepts terms in any order, repeated exponents and
//! optional whitespace.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid polynomial at byte {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (exp, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str("t")?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParsePolyError {
        ParsePolyError { pos: self.pos, msg: msg.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn signed_int(&mut self) -> Result<i64, ParsePolyError> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let v: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s.as_bytes(), pos: 0 };
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                if first {
                    return Err(cur.err("empty input"));
                }
                break;
            }
            let neg = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') || first {
                false
            } else {
                return Err(cur.err("expected '+' or '-'"));
            };
            first = false;
            // a sign may follow the operator, as in "t + -1"
            let neg = if cur.eat(b'-') { !neg } else { neg };

            let coeff = match cur.digits() {
                Some(d) => {
                    let c: BigInt = d.parse().unwrap();
                    if cur.eat(b'*') {
                        cur.skip_ws();
                        if cur.peek() != Some(b't') {
                            return Err(cur.err("expected 't' after '*'"));
                        }
                    }
                    Some(c)
                }
                None => None,
            };
            cur.skip_ws();
            let exp = if cur.peek() == Some(b't') {
                cur.pos += 1;
                if cur.eat(b'^') {
                    cur.signed_int()?
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(cur.err("expected a coefficient or 't'"));
            };
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if neg {
                c = -c;
            }
            if !c.is_zero() {
                acc += &LaurentPoly::monomial(c, exp);
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::tests::arb_poly;
    use proptest::prelude::*;

    #[test]
    fn renders_descending() {
        let p = LaurentPoly::from_i64s(-1, &[-1, 1, -2, 0, 1]);
        assert_eq!(p.to_string(), "t^3 - 2*t + 1 - t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_i64s(0, &[-1]).to_string(), "-1");
        assert_eq!(LaurentPoly::from_i64s(1, &[-3]).to_string(), "-3*t");
    }

    #[test]
    fn parses_loose_forms() {
        let p: LaurentPoly = "1 - t + t^2".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_i64s(0, &[1, -1, 1]));
        let q: LaurentPoly = "2*t^-2+3t - t + -1".parse().unwrap();
        assert_eq!(q, LaurentPoly::from_i64s(-2, &[2, 0, -1, 2]));
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("2 3".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(a in arb_poly()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
