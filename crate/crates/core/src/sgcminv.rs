//! O(n²) inversion of a comrade matrix.
//!
//! The last two columns of `C⁻¹` come from one forward and one back substitution
//! through the LU factors. Every other column follows from `C⁻¹·C = I` read one
//! column of `C` at a time:
//!
//! ```text
//! Coln-2 = (En-1 − βn-1·Coln-1 − γn·Coln) / αn-2
//! Colj   = (Ej+1 − βj+1·Colj+1 − γj+2·Colj+2 − an-j·Coln) / αj     j = n-3 … 1
//! ```
//!
//! In the symbolic field a zero `αj` (j ≤ n-2) is replaced by `t` before
//! factorizing, and a pivot `μi` replaced by `t` during factorizing shifts `βi` by
//! `t`. The factors, the columns and the final `t = 0` substitution then all refer
//! to the same perturbed matrix. Without the shift the recursion would divide an
//! O(t) mismatch by `αj = t`.

use crate::arith::Counter;
use crate::comrade::ComradeMatrix;
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::facdet::{determinant_params, factorize_params, LUFactors, Params, Substitution, SubstitutionKind};
use crate::scalar::{ExactRational, Number, RationalFunction, Scalar, ScalarMode};

/// Standard basis vector `Er` of length `n` (1-based `r`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisVector {
    pub r: usize,
    pub n: usize,
}

impl BasisVector {
    pub fn new(r: usize, n: usize) -> Self {
        assert!((1..=n).contains(&r), "basis index {r} out of range 1..={n}");
        Self { r, n }
    }

    /// Kronecker δ(i, r) for 1-based `i`.
    pub fn component<S: Scalar>(&self, i: usize) -> S {
        if i == self.r {
            S::one()
        } else {
            S::zero()
        }
    }

    pub fn to_vec<S: Scalar>(&self) -> Vec<S> {
        (1..=self.n).map(|i| self.component(i)).collect()
    }
}

/// Comrade parameters in a working field, exposed so the column formulas can be run
/// step by step on a perturbed matrix.
#[derive(Debug, Clone)]
pub struct ComradeParams<S> {
    inner: Params<S>,
}

impl<S: Scalar> ComradeParams<S> {
    pub fn lift(c: &ComradeMatrix) -> Self {
        Self { inner: Params::lift(c) }
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    /// Replaces every zero `αj` with `j ≤ n-2` by `t`, in increasing `j`.
    ///
    /// Fails with [`Error::ZeroAlpha`] in fields without an indeterminate. `αn-1` is
    /// never a divisor and is left alone.
    pub fn substitute_alphas(&mut self) -> Result<Vec<Substitution>, Error> {
        let mut log = Vec::new();
        for j in 1..=self.n() - 2 {
            if self.inner.alpha(j).is_zero() {
                let t = S::indeterminate().ok_or(Error::ZeroAlpha(j))?;
                self.inner.set_alpha(j, t);
                log.push(Substitution {
                    kind: SubstitutionKind::Alpha,
                    index: j,
                });
            }
        }
        Ok(log)
    }

    /// Shifts `βi` by `t` for every pivot substitution in `subs`, so these
    /// parameters describe the matrix the factors actually belong to.
    pub fn absorb_pivots(&mut self, subs: &[Substitution]) {
        for s in subs.iter().filter(|s| s.kind == SubstitutionKind::Pivot) {
            if let Some(t) = S::indeterminate() {
                self.inner.shift_beta(s.index, &t);
            }
        }
    }

    pub fn factorize(&self) -> Result<LUFactors<S>, Error> {
        factorize_params(&self.inner, &mut Counter::new())
    }
}

fn column_n<S: Scalar>(f: &LUFactors<S>, p: &Params<S>, ops: &mut Counter) -> Result<Vec<S>, Error> {
    let n = p.n;
    let mut col = vec![S::zero(); n];
    col[n - 1] = ops.div(&S::one(), f.mu_at(n))?;
    for i in (1..n).rev() {
        let num = ops.mul(p.alpha(i), &col[i]);
        col[i - 1] = ops.div(&num, f.mu_at(i))?.neg();
    }
    Ok(col)
}

fn column_n_minus_1<S: Scalar>(f: &LUFactors<S>, p: &Params<S>, ops: &mut Counter) -> Result<Vec<S>, Error> {
    let n = p.n;
    let mut col = vec![S::zero(); n];
    col[n - 1] = ops.div(f.x_at(n - 1), f.mu_at(n))?.neg();
    let num = ops.sub(&S::one(), &ops.mul(p.alpha(n - 1), &col[n - 1]));
    col[n - 2] = ops.div(&num, f.mu_at(n - 1))?;
    for i in (1..n - 1).rev() {
        let num = ops.mul(p.alpha(i), &col[i]);
        col[i - 1] = ops.div(&num, f.mu_at(i))?.neg();
    }
    Ok(col)
}

fn last_two<S: Scalar>(
    f: &LUFactors<S>,
    p: &Params<S>,
    parallel: bool,
    ops: &mut Counter,
) -> Result<(Vec<S>, Vec<S>), Error> {
    let (mut ops_n, mut ops_m) = (Counter::new(), Counter::new());
    let (col_n, col_m) = if parallel {
        rayon::join(|| column_n(f, p, &mut ops_n), || column_n_minus_1(f, p, &mut ops_m))
    } else {
        (column_n(f, p, &mut ops_n), column_n_minus_1(f, p, &mut ops_m))
    };
    ops.absorb(&ops_n);
    ops.absorb(&ops_m);
    Ok((col_n?, col_m?))
}

/// `(Coln, Coln-1)` from the LU factors by back substitution.
pub fn last_two_columns<S: Scalar>(f: &LUFactors<S>, p: &ComradeParams<S>) -> Result<(Vec<S>, Vec<S>), Error> {
    last_two(f, &p.inner, false, &mut Counter::new())
}

fn remaining<S: Scalar>(col_n: &[S], col_m: &[S], p: &Params<S>, ops: &mut Counter) -> Result<Vec<Vec<S>>, Error> {
    let n = p.n;
    // cols[j - 1] holds Colj
    let mut cols: Vec<Vec<S>> = vec![Vec::new(); n];
    cols[n - 1] = col_n.to_vec();
    cols[n - 2] = col_m.to_vec();

    let e = BasisVector::new(n - 1, n);
    let mut next = Vec::with_capacity(n);
    for i in 1..=n {
        let mut acc = ops.sub(&e.component::<S>(i), &ops.mul(p.beta(n - 1), &col_m[i - 1]));
        acc = ops.sub(&acc, &ops.mul(p.gamma(n), &col_n[i - 1]));
        next.push(ops.div(&acc, p.alpha(n - 2)).map_err(|_| Error::ZeroAlpha(n - 2))?);
    }
    cols[n - 3] = next;

    for j in (1..=n.saturating_sub(3)).rev() {
        let e = BasisVector::new(j + 1, n);
        let (c1, c2) = (&cols[j], &cols[j + 1]);
        let mut next = Vec::with_capacity(n);
        for i in 1..=n {
            let mut acc = ops.sub(&e.component::<S>(i), &ops.mul(p.beta(j + 1), &c1[i - 1]));
            acc = ops.sub(&acc, &ops.mul(p.gamma(j + 2), &c2[i - 1]));
            acc = ops.sub(&acc, &ops.mul(p.a(n - j), &col_n[i - 1]));
            next.push(ops.div(&acc, p.alpha(j)).map_err(|_| Error::ZeroAlpha(j))?);
        }
        cols[j - 1] = next;
    }
    Ok(cols)
}

/// All `n` columns, `result[j - 1] = Colj`, given the last two.
///
/// Fails with [`Error::ZeroAlpha`] if a divisor `αj` is zero; call
/// [`ComradeParams::substitute_alphas`] first in the symbolic field.
pub fn remaining_columns<S: Scalar>(
    col_n: &[S],
    col_n_minus_1: &[S],
    p: &ComradeParams<S>,
) -> Result<Vec<Vec<S>>, Error> {
    remaining(col_n, col_n_minus_1, &p.inner, &mut Counter::new())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InvertOptions {
    /// Compute `Coln` and `Coln-1` on two threads.
    pub parallel_columns: bool,
}

/// Inverse, determinant and bookkeeping of one inversion run.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseResult<V> {
    pub inverse: DenseMatrix<V>,
    pub determinant: V,
    /// Every `t` substitution in the order it happened: pivots of the determinant
    /// pass, then α substitutions, then pivots of the refactorization they trigger.
    pub substitutions: Vec<Substitution>,
    pub op_count: u64,
}

pub fn invert_with<S: Scalar>(c: &ComradeMatrix, opts: InvertOptions) -> Result<InverseResult<S::Value>, Error> {
    let mut ops = Counter::new();
    let mut params = ComradeParams::<S>::lift(c);

    let (det, mut factors) = determinant_params(&params.inner, &mut ops)?;
    if S::from_value(&det.value).is_zero() {
        return Err(Error::Singular);
    }
    let mut log = det.substitutions.clone();

    let alpha_log = params.substitute_alphas()?;
    if !alpha_log.is_empty() {
        log.extend(alpha_log);
        factors = factorize_params(&params.inner, &mut ops)?;
        log.extend_from_slice(factors.substitutions());
    }
    params.absorb_pivots(factors.substitutions());

    let (col_n, col_m) = last_two(&factors, &params.inner, opts.parallel_columns, &mut ops)?;
    let cols = remaining(&col_n, &col_m, &params.inner, &mut ops)?;
    let inverse = DenseMatrix::from_columns(cols)?.try_map(S::finish)?;

    Ok(InverseResult {
        inverse,
        determinant: det.value,
        substitutions: log,
        op_count: ops.ops(),
    })
}

/// Inverts in the field `S` with default options.
pub fn invert<S: Scalar>(c: &ComradeMatrix) -> Result<InverseResult<S::Value>, Error> {
    invert_with::<S>(c, InvertOptions::default())
}

/// Mode-erased inversion result.
#[derive(Debug, Clone, PartialEq)]
pub enum Inverse {
    Exact {
        mode: ScalarMode,
        result: InverseResult<ExactRational>,
    },
    Float(InverseResult<f64>),
}

impl Inverse {
    pub fn mode(&self) -> ScalarMode {
        match self {
            Inverse::Exact { mode, .. } => *mode,
            Inverse::Float(_) => ScalarMode::Float,
        }
    }

    pub fn determinant(&self) -> Number {
        match self {
            Inverse::Exact { result, .. } => Number::Exact(result.determinant.clone()),
            Inverse::Float(r) => Number::Float(r.determinant),
        }
    }

    pub fn substitutions(&self) -> &[Substitution] {
        match self {
            Inverse::Exact { result, .. } => &result.substitutions,
            Inverse::Float(r) => &r.substitutions,
        }
    }

    pub fn op_count(&self) -> u64 {
        match self {
            Inverse::Exact { result, .. } => result.op_count,
            Inverse::Float(r) => r.op_count,
        }
    }
}

pub fn invert_in(c: &ComradeMatrix, mode: ScalarMode, opts: InvertOptions) -> Result<Inverse, Error> {
    Ok(match mode {
        ScalarMode::Exact => Inverse::Exact {
            mode,
            result: invert_with::<ExactRational>(c, opts)?,
        },
        ScalarMode::Symbolic => Inverse::Exact {
            mode,
            result: invert_with::<RationalFunction>(c, opts)?,
        },
        ScalarMode::Float => Inverse::Float(invert_with::<f64>(c, opts)?),
    })
}
