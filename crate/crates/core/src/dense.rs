//! Square row-major matrices.

use std::fmt;

use crate::error::Error;
use crate::scalar::{ExactRational, Scalar};

/// An `n × n` matrix stored row-major. Indices are 0-based.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T> DenseMatrix<T> {
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self, Error> {
        if entries.len() != n * n {
            return Err(Error::Shape {
                field: "entries",
                expected: n * n,
                actual: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self, Error>
    where
        T: Clone,
    {
        let n = columns.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::Shape {
                field: "column",
                expected: n,
                actual: bad.len(),
            });
        }
        Ok(Self::from_fn(n, |i, j| columns[j][i].clone()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn column(&self, j: usize) -> Vec<T>
    where
        T: Clone,
    {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<DenseMatrix<U>, E> {
        Ok(DenseMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| S::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, v)| {
            if k / self.n == k % self.n {
                *v == S::one()
            } else {
                v.is_zero()
            }
        })
    }

    /// Plain cubic product. Panics if the orders differ.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix orders differ");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n).fold(S::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(rhs.get(k, j)))
                }
            })
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix orders differ");
        DenseMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }
}

impl DenseMatrix<ExactRational> {
    pub fn to_f64(&self) -> DenseMatrix<f64> {
        self.map(ExactRational::to_f64)
    }

    /// Induced infinity norm (maximum absolute row sum), exactly.
    pub fn inf_norm(&self) -> ExactRational {
        self.rows()
            .map(|r| r.iter().fold(ExactRational::zero(), |acc, v| &acc + &v.abs()))
            .max()
            .unwrap_or_default()
    }
}

impl DenseMatrix<f64> {
    /// Induced infinity norm (maximum absolute row sum). NaN propagates.
    pub fn inf_norm(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, |m, s| if s.is_nan() || m.is_nan() { f64::NAN } else { m.max(s) })
    }
}

impl<T: fmt::Display> fmt::Display for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n.max(1))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_is_checked() {
        assert!(DenseMatrix::new(2, vec![1.0, 2.0, 3.0]).is_err());
        assert!(DenseMatrix::new(2, vec![1.0, 2.0, 3.0, 4.0]).is_ok());
    }

    #[test]
    fn inf_norm_is_max_row_sum() {
        let m = DenseMatrix::new(2, vec![1.0, -2.0, 0.5, 0.25]).unwrap();
        assert_eq!(m.inf_norm(), 3.0);
        let nan = DenseMatrix::new(1, vec![f64::NAN]).unwrap();
        assert!(nan.inf_norm().is_nan());
    }

    #[test]
    fn columns_round_trip() {
        let m = DenseMatrix::from_fn(3, |i, j| (i * 3 + j) as f64);
        let rebuilt = DenseMatrix::from_columns((0..3).map(|j| m.column(j)).collect()).unwrap();
        assert_eq!(rebuilt, m);
    }
}
