//! Scalar fields the comrade algorithms run over.
//!
//! [`Scalar`] is the single contract shared by exact rationals, rational functions
//! in `t`, and binary64 floats. Algorithms are written once against it.

mod poly;
mod ratfun;
mod rational;

use std::fmt;
use std::str::FromStr;

pub use poly::{poly_gcd, Polynomial};
pub use ratfun::{rf_eval_at_zero, RationalFunction};
pub use rational::ExactRational;

use crate::error::Error;

/// Which field a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Exact,
    Symbolic,
    Float,
}

impl ScalarMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarMode::Exact => "exact",
            ScalarMode::Symbolic => "symbolic",
            ScalarMode::Float => "float",
        }
    }
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScalarMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(ScalarMode::Exact),
            "symbolic" => Ok(ScalarMode::Symbolic),
            "float" => Ok(ScalarMode::Float),
            other => Err(format!("unknown mode `{other}` (expected exact, symbolic or float)")),
        }
    }
}

/// Field operations used by the comrade algorithms.
///
/// `is_zero` is exact in every implementation; floats compare against `0.0` with no
/// tolerance so a near-zero pivot takes the same branch as any other nonzero value.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// What a finished computation reports: rationals for the exact and symbolic
    /// fields, `f64` for floats.
    type Value: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    const MODE: ScalarMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &ExactRational) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` when `rhs` is zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    /// The perturbation symbol used to replace a vanishing pivot or divisor, if this
    /// field has one.
    fn indeterminate() -> Option<Self>;

    /// Maps a working value to its reported value, substituting `t = 0` where relevant.
    fn finish(&self) -> Result<Self::Value, Error>;

    /// Lifts a reported value back into the working field.
    fn from_value(v: &Self::Value) -> Self;
}

impl Scalar for ExactRational {
    type Value = ExactRational;
    const MODE: ScalarMode = ScalarMode::Exact;

    fn zero() -> Self {
        ExactRational::zero()
    }
    fn one() -> Self {
        ExactRational::one()
    }
    fn from_rational(r: &ExactRational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        ExactRational::checked_div(self, rhs)
    }
    fn indeterminate() -> Option<Self> {
        None
    }
    fn finish(&self) -> Result<ExactRational, Error> {
        Ok(self.clone())
    }
    fn from_value(v: &ExactRational) -> Self {
        v.clone()
    }
}

impl Scalar for RationalFunction {
    type Value = ExactRational;
    const MODE: ScalarMode = ScalarMode::Symbolic;

    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_rational(r: &ExactRational) -> Self {
        RationalFunction::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RationalFunction::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RationalFunction::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
    fn indeterminate() -> Option<Self> {
        Some(RationalFunction::t())
    }
    fn finish(&self) -> Result<ExactRational, Error> {
        self.eval_at_zero()
    }
    fn from_value(v: &ExactRational) -> Self {
        RationalFunction::constant(v.clone())
    }
}

impl Scalar for f64 {
    type Value = f64;
    const MODE: ScalarMode = ScalarMode::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(r: &ExactRational) -> Self {
        r.to_f64()
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        (*rhs != 0.0).then(|| self / rhs)
    }
    fn indeterminate() -> Option<Self> {
        None
    }
    fn finish(&self) -> Result<f64, Error> {
        Ok(*self)
    }
    fn from_value(v: &f64) -> Self {
        *v
    }
}

/// A reported scalar whose field is only known at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(ExactRational),
    Float(f64),
}

impl Number {
    pub fn is_zero(&self) -> bool {
        match self {
            Number::Exact(r) => r.is_zero(),
            Number::Float(x) => *x == 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => r.to_f64(),
            Number::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactRational> {
        match self {
            Number::Exact(r) => Some(r),
            Number::Float(_) => None,
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(r) => write!(f, "{r}"),
            Number::Float(x) => write!(f, "{x}"),
        }
    }
}

impl From<ExactRational> for Number {
    fn from(r: ExactRational) -> Self {
        Number::Exact(r)
    }
}

impl From<f64> for Number {
    fn from(x: f64) -> Self {
        Number::Float(x)
    }
}
