//! Arbitrary-precision rationals in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact rational number with a positive denominator, always reduced.
///
/// The textual form is `p/q`, or just `p` when the denominator is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(numer, denom)))
    }

    /// The exact binary value of a finite double.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Self)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Self(&self.0 / &rhs.0))
        }
    }

    /// Nearest double; saturates to infinity for out-of-range magnitudes.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign on `p`; surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseRational(s.to_string());
        let text = s.trim();
        match text.split_once('/') {
            None => parse_integer(text)
                .map(|n| Self(BigRational::from_integer(n)))
                .ok_or_else(bad),
            Some((p, q)) => {
                let numer = parse_integer(p).ok_or_else(bad)?;
                if q.starts_with(['-', '+']) {
                    return Err(bad());
                }
                let denom = parse_integer(q).ok_or_else(bad)?;
                if denom.is_zero() {
                    return Err(bad());
                }
                Ok(Self(BigRational::new(numer, denom)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on a zero divisor, like integer division. Use [`ExactRational::checked_div`]
/// where the divisor may vanish.
impl Div<&ExactRational> for &ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &ExactRational) -> ExactRational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_prints_canonical_form() {
        assert_eq!(q("-3/2").to_string(), "-3/2");
        assert_eq!(q("5").to_string(), "5");
        assert_eq!(q("4/2").to_string(), "2");
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-0/7").to_string(), "0");
        assert_eq!(q(" +10/4 ").to_string(), "5/2");
    }

    #[test]
    fn rejects_malformed_text() {
        for s in ["", "1/0", "abc", "1/", "/2", "1/-2", "1.5", "1/2/3", "--1", "٣"] {
            assert!(s.parse::<ExactRational>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = q("0/5");
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn float_round_trip_is_exact() {
        let r = ExactRational::from_f64(0.1).unwrap();
        assert_eq!(r.to_f64(), 0.1);
        assert!(ExactRational::from_f64(f64::NAN).is_none());
    }
}
