//! Reference determinant and inverse by dense Gaussian elimination over exact rationals.
//!
//! O(n³) and structure-blind. Pivot choice is the first nonzero entry at or below
//! the diagonal, which is deterministic and needs no magnitude comparison.

use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::scalar::ExactRational;

fn to_rows(m: &DenseMatrix<ExactRational>) -> Vec<Vec<ExactRational>> {
    m.rows().map(<[ExactRational]>::to_vec).collect()
}

pub fn dense_det(m: &DenseMatrix<ExactRational>) -> ExactRational {
    let n = m.n();
    let mut a = to_rows(m);
    let mut det = ExactRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return ExactRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = &det * &pivot;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let factor = &a[r][k] / &pivot;
            let (upper, lower) = a.split_at_mut(r);
            for (x, p) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *x = &*x - &(&factor * p);
            }
        }
    }
    det
}

/// Gauss–Jordan on `[M | I]`.
pub fn dense_invert(m: &DenseMatrix<ExactRational>) -> Result<DenseMatrix<ExactRational>, Error> {
    let n = m.n();
    let mut a = to_rows(m);
    let mut inv: Vec<Vec<ExactRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        ExactRational::one()
                    } else {
                        ExactRational::zero()
                    }
                })
                .collect()
        })
        .collect();

    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(p, k);
        inv.swap(p, k);

        let scale = a[k][k].recip().expect("pivot is nonzero");
        for c in 0..n {
            a[k][c] = &a[k][c] * &scale;
            inv[k][c] = &inv[k][c] * &scale;
        }
        for r in 0..n {
            if r == k || a[r][k].is_zero() {
                continue;
            }
            let factor = a[r][k].clone();
            for c in 0..n {
                let da = &factor * &a[k][c];
                a[r][c] = &a[r][c] - &da;
                let di = &factor * &inv[k][c];
                inv[r][c] = &inv[r][c] - &di;
            }
        }
    }
    DenseMatrix::new(n, inv.into_iter().flatten().collect())
}
