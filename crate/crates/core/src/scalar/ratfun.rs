//! Reduced rational functions in one indeterminate `t`.

use std::fmt;

use super::poly::{poly_gcd, Polynomial};
use super::rational::ExactRational;
use crate::error::Error;

/// An element of Q(t) in canonical form.
///
/// The numerator and denominator share no nonconstant factor and the denominator
/// is monic, so two equal functions always have identical fields. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_polynomial(Polynomial::t())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The rational constant this function equals, if it does not depend on `t`.
    pub fn as_constant(&self) -> Option<ExactRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.constant_term())
    }

    /// True when the invariants of the canonical form hold.
    pub fn is_canonical(&self) -> bool {
        if self.den.is_zero() || !self.den.leading().is_some_and(ExactRational::is_one) {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one();
        }
        poly_gcd(&self.num, &self.den).is_ok_and(|g| g.is_one())
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den).expect("denominator is nonzero");
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_rem(&g).expect("gcd is nonzero").0,
                    den.div_rem(&g).expect("gcd is nonzero").0,
                )
            }
        };
        let lc = den.leading().expect("denominator is nonzero").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip().expect("nonzero leading coefficient");
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::reduce(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    /// Substitutes `t = 0`. Fails when the reduced denominator vanishes there.
    pub fn eval_at_zero(&self) -> Result<ExactRational, Error> {
        let d = self.den.constant_term();
        self.num.constant_term().checked_div(&d).ok_or(Error::PoleAtZero)
    }

    pub fn eval(&self, x: &ExactRational) -> Result<ExactRational, Error> {
        self.num
            .eval(x)
            .checked_div(&self.den.eval(x))
            .ok_or(Error::DivisionByZero)
    }
}

/// Free-function form of [`RationalFunction::eval_at_zero`].
pub fn rf_eval_at_zero(f: &RationalFunction) -> Result<ExactRational, Error> {
    f.eval_at_zero()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
