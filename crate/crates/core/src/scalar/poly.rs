//! Dense univariate polynomials over the rationals, in the indeterminate `t`.

use std::fmt;

use super::rational::ExactRational;
use crate::error::Error;

/// Coefficients in ascending order of degree; index `k` holds the coefficient of `t^k`.
///
/// Never stores a trailing zero, so the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![ExactRational::zero(), ExactRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(ExactRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from small integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| ExactRational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> ExactRational {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = &*o + c;
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), Error> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lead = lead.recip().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ExactRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, Error> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroGcd);
    }
    if p.is_constant() && !p.is_zero() || q.is_constant() && !q.is_zero() {
        return Ok(Polynomial::one());
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        // keep remainders monic to damp coefficient growth
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.numer().sign() == num_bigint::Sign::Minus;
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.denom() == &num_bigint::BigInt::from(1) {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 if show_coeff => write!(f, "*t")?,
                1 => write!(f, "t")?,
                _ if show_coeff => write!(f, "*t^{k}")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // t^2 - 1 and t - 1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn gcd_with_unit_is_one() {
        assert_eq!(poly_gcd(&p(&[-6, 7]), &p(&[1])).unwrap(), Polynomial::one());
    }

    #[test]
    fn gcd_is_monic() {
        // 2t^2 + 4t and 2t
        assert_eq!(poly_gcd(&p(&[0, 4, 2]), &p(&[0, 2])).unwrap(), Polynomial::t());
    }

    #[test]
    fn gcd_of_zero_and_p_is_monic_p() {
        let half_plus_t = Polynomial::from_coeffs(vec!["1/2".parse().unwrap(), ExactRational::one()]);
        assert_eq!(poly_gcd(&Polynomial::zero(), &p(&[3, 6])).unwrap(), half_plus_t);
        assert!(matches!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::ZeroGcd)
        ));
    }

    #[test]
    fn division_identity() {
        let a = p(&[5, -3, 0, 2, 1]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
        assert!(matches!(a.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 1]).sub(&p(&[0, 1])), p(&[1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-6, 7]).to_string(), "7*t - 6");
        assert_eq!(p(&[0, -1, 1]).to_string(), "t^2 - t");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
