//! Doolittle LU factorization of a comrade matrix and its determinant.
//!
//! `C = L·U` where `U` is upper bidiagonal (pivots `μ` on the diagonal, `α` above it)
//! and `L` is unit lower bidiagonal with a dense last row `x`. Both factors are
//! produced in O(n) by the recurrences
//!
//! ```text
//! μ1 = β1
//! μi = βi − (αi-1 / μi-1)·γi              2 ≤ i ≤ n-1
//! μn = βn − αn-1·xn-1
//! x1 = an / μ1
//! xi = (an-i+1 − αi-1·xi-1) / μi          2 ≤ i ≤ n-2
//! xn-1 = (γn − αn-2·xn-2) / μn-1
//! ```
//!
//! In the symbolic field a pivot that comes out identically zero is replaced by the
//! indeterminate `t`; results are evaluated at `t = 0` at the end.

use std::fmt;

use crate::arith::Counter;
use crate::comrade::ComradeMatrix;
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::scalar::{ExactRational, Number, RationalFunction, Scalar, ScalarMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubstitutionKind {
    Pivot,
    Alpha,
}

/// A record that the value at a 1-based `index` was replaced by `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Substitution {
    pub kind: SubstitutionKind,
    pub index: usize,
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SubstitutionKind::Pivot => write!(f, "mu[{}] := t", self.index),
            SubstitutionKind::Alpha => write!(f, "alpha[{}] := t", self.index),
        }
    }
}

/// Comrade parameters lifted into a working field, 1-based accessors.
#[derive(Debug, Clone)]
pub(crate) struct Params<S> {
    pub n: usize,
    beta: Vec<S>,
    alpha: Vec<S>,
    gamma: Vec<S>,
    a: Vec<S>,
}

impl<S: Scalar> Params<S> {
    pub fn lift(c: &ComradeMatrix) -> Self {
        let lift = |v: &[ExactRational]| v.iter().map(S::from_rational).collect();
        Self {
            n: c.n(),
            beta: lift(c.betas()),
            alpha: lift(c.alphas()),
            gamma: lift(c.gammas()),
            a: lift(c.a_coeffs()),
        }
    }

    pub fn beta(&self, i: usize) -> &S {
        &self.beta[i - 1]
    }
    pub fn alpha(&self, i: usize) -> &S {
        &self.alpha[i - 1]
    }
    pub fn gamma(&self, i: usize) -> &S {
        &self.gamma[i - 2]
    }
    pub fn a(&self, i: usize) -> &S {
        &self.a[i - 3]
    }

    pub fn set_alpha(&mut self, i: usize, v: S) {
        self.alpha[i - 1] = v;
    }

    /// `βi += by`. A pivot replaced by `t` equals `βi` shifted by `t` in the factored matrix.
    pub fn shift_beta(&mut self, i: usize, by: &S) {
        self.beta[i - 1] = self.beta[i - 1].add(by);
    }
}

/// Pivots `μ1…μn` and last `L` row `x1…xn-1`, plus every substitution made.
#[derive(Debug, Clone, PartialEq)]
pub struct LUFactors<S> {
    mu: Vec<S>,
    x: Vec<S>,
    substitutions: Vec<Substitution>,
    op_count: u64,
}

impl<S: Scalar> LUFactors<S> {
    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[S] {
        &self.mu
    }

    pub fn x(&self) -> &[S] {
        &self.x
    }

    /// μi, 1-based.
    pub fn mu_at(&self, i: usize) -> &S {
        &self.mu[i - 1]
    }

    /// xi, 1-based.
    pub fn x_at(&self, i: usize) -> &S {
        &self.x[i - 1]
    }

    pub fn substitutions(&self) -> &[Substitution] {
        &self.substitutions
    }

    /// Field operations spent computing the factors.
    pub fn op_count(&self) -> u64 {
        self.op_count
    }
}

/// A pivot that came out zero: substitute `t`, or fail in fields without it.
/// `μn` is never a divisor in the factorization, so a zero last pivot is kept
/// as is in the exact and float fields.
fn settle_pivot<S: Scalar>(value: S, index: usize, n: usize, log: &mut Vec<Substitution>) -> Result<S, Error> {
    if !value.is_zero() {
        return Ok(value);
    }
    match S::indeterminate() {
        Some(t) => {
            log.push(Substitution {
                kind: SubstitutionKind::Pivot,
                index,
            });
            Ok(t)
        }
        None if index == n => Ok(value),
        None => Err(Error::ZeroPivot(index)),
    }
}

pub(crate) fn factorize_params<S: Scalar>(p: &Params<S>, ops: &mut Counter) -> Result<LUFactors<S>, Error> {
    let n = p.n;
    let start = ops.ops();
    let mut log = Vec::new();
    let mut mu: Vec<S> = Vec::with_capacity(n);
    let mut x: Vec<S> = Vec::with_capacity(n - 1);

    mu.push(settle_pivot(p.beta(1).clone(), 1, n, &mut log)?);
    x.push(ops.div(p.a(n), &mu[0])?);

    for i in 2..n {
        // μi = βi − (αi-1 / μi-1)·γi
        let ratio = ops.div(p.alpha(i - 1), &mu[i - 2])?;
        let raw = ops.sub(p.beta(i), &ops.mul(&ratio, p.gamma(i)));
        mu.push(settle_pivot(raw, i, n, &mut log)?);

        let rhs = if i <= n - 2 { p.a(n - i + 1) } else { p.gamma(n) };
        let carried = ops.mul(p.alpha(i - 1), &x[i - 2]);
        x.push(ops.div(&ops.sub(rhs, &carried), &mu[i - 1])?);
    }

    let last = ops.sub(p.beta(n), &ops.mul(p.alpha(n - 1), &x[n - 2]));
    mu.push(settle_pivot(last, n, n, &mut log)?);

    Ok(LUFactors {
        mu,
        x,
        substitutions: log,
        op_count: ops.ops() - start,
    })
}

/// LU factors of `C` in the field `S`.
///
/// Exact and float fields fail with [`Error::ZeroPivot`] on a vanishing pivot among
/// `μ1…μn-1`; the symbolic field replaces it by `t` and logs the substitution.
pub fn factorize<S: Scalar>(c: &ComradeMatrix) -> Result<LUFactors<S>, Error> {
    factorize_params(&Params::lift(c), &mut Counter::new())
}

/// Dense `L` and `U` rebuilt from the factors.
pub fn reconstruct_lu<S: Scalar>(
    f: &LUFactors<S>,
    c: &ComradeMatrix,
) -> Result<(DenseMatrix<S>, DenseMatrix<S>), Error> {
    let n = c.n();
    let p = Params::<S>::lift(c);
    let mut l = DenseMatrix::<S>::identity(n);
    let mut u = DenseMatrix::<S>::zeros(n);
    for i in 1..n - 1 {
        // row i+1 (1-based) carries γi+1 / μi
        *l.get_mut(i, i - 1) = p.gamma(i + 1).checked_div(f.mu_at(i)).ok_or(Error::DivisionByZero)?;
    }
    for j in 0..n - 1 {
        *l.get_mut(n - 1, j) = f.x[j].clone();
    }
    for i in 0..n {
        *u.get_mut(i, i) = f.mu[i].clone();
        if i + 1 < n {
            *u.get_mut(i, i + 1) = p.alpha(i + 1).clone();
        }
    }
    Ok((l, u))
}

/// Outcome of a determinant run.
#[derive(Debug, Clone, PartialEq)]
pub struct DetReport<S: Scalar> {
    /// `∏ μi` in the working field, before any substitution of `t = 0`.
    pub product: S,
    pub value: S::Value,
    pub substitutions: Vec<Substitution>,
    pub op_count: u64,
}

pub(crate) fn determinant_params<S: Scalar>(
    p: &Params<S>,
    ops: &mut Counter,
) -> Result<(DetReport<S>, LUFactors<S>), Error> {
    let start = ops.ops();
    let factors = factorize_params(p, ops)?;
    let mut product = factors.mu[0].clone();
    for m in &factors.mu[1..] {
        product = ops.mul(&product, m);
    }
    let value = product.finish()?;
    let report = DetReport {
        product,
        value,
        substitutions: factors.substitutions.clone(),
        op_count: ops.ops() - start,
    };
    Ok((report, factors))
}

/// Determinant as the product of the pivots, evaluated at `t = 0` in the symbolic field.
pub fn determinant<S: Scalar>(c: &ComradeMatrix) -> Result<DetReport<S>, Error> {
    determinant_params(&Params::lift(c), &mut Counter::new()).map(|(r, _)| r)
}

/// Mode-erased determinant result.
#[derive(Debug, Clone, PartialEq)]
pub struct Determinant {
    pub mode: ScalarMode,
    pub value: Number,
    /// The pivot product in the working field, printed.
    pub product: String,
    pub substitutions: Vec<Substitution>,
    pub op_count: u64,
}

impl<S: Scalar> From<DetReport<S>> for Determinant
where
    Number: From<S::Value>,
{
    fn from(r: DetReport<S>) -> Self {
        Determinant {
            mode: S::MODE,
            value: r.value.into(),
            product: r.product.to_string(),
            substitutions: r.substitutions,
            op_count: r.op_count,
        }
    }
}

pub fn determinant_in(c: &ComradeMatrix, mode: ScalarMode) -> Result<Determinant, Error> {
    Ok(match mode {
        ScalarMode::Exact => determinant::<ExactRational>(c)?.into(),
        ScalarMode::Symbolic => determinant::<RationalFunction>(c)?.into(),
        ScalarMode::Float => determinant::<f64>(c)?.into(),
    })
}
