//! The general comrade matrix: a tridiagonal band plus a dense last row.
//!
//! ```text
//!  β1  α1
//!  γ2  β2  α2
//!      γ3  β3  α3
//!           ⋱   ⋱    ⋱
//!              γn-1 βn-1 αn-1
//!  an an-1 … a3  γn   βn
//! ```
//!
//! Accessors take the 1-based subscripts shown above.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::scalar::{ExactRational, Scalar};

/// Compact O(n) storage of a comrade matrix with exact entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComradeMatrix {
    n: usize,
    beta: Vec<ExactRational>,
    alpha: Vec<ExactRational>,
    /// γ2 … γn
    gamma: Vec<ExactRational>,
    /// a3 … an, increasing subscript
    a: Vec<ExactRational>,
}

fn check_len(field: &'static str, v: &[ExactRational], expected: usize) -> Result<(), Error> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::Shape {
            field,
            expected,
            actual: v.len(),
        })
    }
}

impl ComradeMatrix {
    /// Validates the order (`n ≥ 3`) and the four list lengths `n, n-1, n-1, n-2`.
    pub fn new(
        n: usize,
        beta: Vec<ExactRational>,
        alpha: Vec<ExactRational>,
        gamma: Vec<ExactRational>,
        a: Vec<ExactRational>,
    ) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::Order(n));
        }
        check_len("beta", &beta, n)?;
        check_len("alpha", &alpha, n - 1)?;
        check_len("gamma", &gamma, n - 1)?;
        check_len("a", &a, n - 2)?;
        Ok(Self {
            n,
            beta,
            alpha,
            gamma,
            a,
        })
    }

    /// Like [`ComradeMatrix::new`] but takes rational literals such as `"-3/2"`.
    pub fn from_strs(n: usize, beta: &[&str], alpha: &[&str], gamma: &[&str], a: &[&str]) -> Result<Self, Error> {
        let parse = |v: &[&str]| v.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>();
        Self::new(n, parse(beta)?, parse(alpha)?, parse(gamma)?, parse(a)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// βi, 1 ≤ i ≤ n
    pub fn beta(&self, i: usize) -> &ExactRational {
        &self.beta[i - 1]
    }

    /// αi, 1 ≤ i ≤ n-1
    pub fn alpha(&self, i: usize) -> &ExactRational {
        &self.alpha[i - 1]
    }

    /// γi, 2 ≤ i ≤ n
    pub fn gamma(&self, i: usize) -> &ExactRational {
        &self.gamma[i - 2]
    }

    /// ai, 3 ≤ i ≤ n
    pub fn a(&self, i: usize) -> &ExactRational {
        &self.a[i - 3]
    }

    pub fn betas(&self) -> &[ExactRational] {
        &self.beta
    }

    pub fn alphas(&self) -> &[ExactRational] {
        &self.alpha
    }

    pub fn gammas(&self) -> &[ExactRational] {
        &self.gamma
    }

    pub fn a_coeffs(&self) -> &[ExactRational] {
        &self.a
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> ExactRational {
        let n = self.n;
        if i == n - 1 {
            return match j {
                _ if j == n - 1 => self.beta[n - 1].clone(),
                _ if j == n - 2 => self.gamma[n - 2].clone(),
                // column j (0-based) of the last row holds a_{n-j}
                _ => self.a(n - j).clone(),
            };
        }
        if i == j {
            self.beta[i].clone()
        } else if j == i + 1 {
            self.alpha[i].clone()
        } else if i == j + 1 {
            self.gamma[i - 1].clone()
        } else {
            ExactRational::zero()
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<ExactRational> {
        DenseMatrix::from_fn(self.n, |i, j| self.entry(i, j))
    }

    pub fn to_dense_as<S: Scalar>(&self) -> DenseMatrix<S> {
        DenseMatrix::from_fn(self.n, |i, j| S::from_rational(&self.entry(i, j)))
    }

    /// Reads the comrade parameters back from a dense matrix, rejecting nonzeros
    /// outside the comrade pattern.
    pub fn from_dense(m: &DenseMatrix<ExactRational>) -> Result<Self, Error> {
        let n = m.n();
        if n < 3 {
            return Err(Error::Order(n));
        }
        for i in 0..n - 1 {
            for j in 0..n {
                if i.abs_diff(j) > 1 && !m.get(i, j).is_zero() {
                    return Err(Error::Format {
                        location: format!("entry ({}, {})", i + 1, j + 1),
                        message: "nonzero outside the comrade pattern".into(),
                    });
                }
            }
        }
        let beta = (0..n).map(|i| m.get(i, i).clone()).collect();
        let alpha = (0..n - 1).map(|i| m.get(i, i + 1).clone()).collect();
        let gamma = (1..n).map(|i| m.get(i, i - 1).clone()).collect();
        let a = (3..=n).map(|k| m.get(n - 1, n - k).clone()).collect();
        Self::new(n, beta, alpha, gamma, a)
    }

    /// `C · S`, using the comrade structure: O(n²).
    pub fn mul_right<S: Scalar>(&self, s: &DenseMatrix<S>) -> DenseMatrix<S> {
        let n = self.n;
        assert_eq!(s.n(), n, "matrix orders differ");
        let lift = |r: &ExactRational| S::from_rational(r);
        let beta: Vec<S> = self.beta.iter().map(lift).collect();
        let alpha: Vec<S> = self.alpha.iter().map(lift).collect();
        let gamma: Vec<S> = self.gamma.iter().map(lift).collect();
        let last: Vec<S> = (0..n).map(|j| lift(&self.entry(n - 1, j))).collect();
        DenseMatrix::from_fn(n, |i, j| {
            if i == n - 1 {
                return (0..n).fold(S::zero(), |acc, k| acc.add(&last[k].mul(s.get(k, j))));
            }
            let mut acc = beta[i].mul(s.get(i, j));
            if i > 0 {
                acc = acc.add(&gamma[i - 1].mul(s.get(i - 1, j)));
            }
            acc.add(&alpha[i].mul(s.get(i + 1, j)))
        })
    }

    /// `S · C`, using the comrade structure: O(n²).
    pub fn mul_left<S: Scalar>(&self, s: &DenseMatrix<S>) -> DenseMatrix<S> {
        let n = self.n;
        assert_eq!(s.n(), n, "matrix orders differ");
        let lift = |r: &ExactRational| S::from_rational(r);
        DenseMatrix::from_fn(n, |i, j| {
            // column j of C: rows j-1, j, j+1 (within the band, above the last row) and row n-1
            let mut acc = S::zero();
            for k in j.saturating_sub(1)..(j + 2).min(n - 1) {
                let c = self.entry(k, j);
                if !c.is_zero() {
                    acc = acc.add(&s.get(i, k).mul(&lift(&c)));
                }
            }
            let c = self.entry(n - 1, j);
            acc.add(&s.get(i, n - 1).mul(&lift(&c)))
        })
    }
}

/// Validating constructor; see [`ComradeMatrix::new`].
pub fn make_comrade(
    n: usize,
    beta: Vec<ExactRational>,
    alpha: Vec<ExactRational>,
    gamma: Vec<ExactRational>,
    a: Vec<ExactRational>,
) -> Result<ComradeMatrix, Error> {
    ComradeMatrix::new(n, beta, alpha, gamma, a)
}

/// The test family with `β = -3/2` (last `-2`), `α = γ = 1/2` (with `γn = 0`) and
/// `a = -1/2`.
pub fn example33(n: usize) -> Result<ComradeMatrix, Error> {
    if n < 3 {
        return Err(Error::Order(n));
    }
    let q = |s: &str| s.parse::<ExactRational>().expect("literal");
    let mut beta = vec![q("-3/2"); n];
    beta[n - 1] = q("-2");
    let alpha = vec![q("1/2"); n - 1];
    let mut gamma = vec![q("1/2"); n - 1];
    gamma[n - 2] = ExactRational::zero();
    let a = vec![q("-1/2"); n - 2];
    ComradeMatrix::new(n, beta, alpha, gamma, a)
}

/// Deterministic random comrade matrix with integer entries in `[-9, 9]`.
///
/// With probability `zero_pivot_bias` (clamped to `[0, 1]`) `β1` is forced to zero, and
/// independently with the same probability one `αj` with `j ≤ n-2` is forced to zero.
/// When `β1` is already forced, `α1` is never chosen so row 1 does not vanish outright.
pub fn random_comrade(n: usize, seed: u64, zero_pivot_bias: f64) -> Result<ComradeMatrix, Error> {
    if n < 3 {
        return Err(Error::Order(n));
    }
    let p = if zero_pivot_bias.is_nan() {
        0.0
    } else {
        zero_pivot_bias.clamp(0.0, 1.0)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |len: usize| -> Vec<ExactRational> {
        (0..len)
            .map(|_| ExactRational::from_integer(rng.gen_range(-9..=9)))
            .collect()
    };
    let mut beta = draw(n);
    let mut alpha = draw(n - 1);
    let gamma = draw(n - 1);
    let a = draw(n - 2);

    let zero_beta = rng.gen_bool(p);
    if zero_beta {
        beta[0] = ExactRational::zero();
    }
    if rng.gen_bool(p) {
        let lo = if zero_beta { 2 } else { 1 };
        if lo <= n - 2 {
            let j = rng.gen_range(lo..=n - 2);
            alpha[j - 1] = ExactRational::zero();
        }
    }
    ComradeMatrix::new(n, beta, alpha, gamma, a)
}
