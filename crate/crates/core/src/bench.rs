//! Accuracy and scaling benchmark over a family of comrade matrices.

use std::io::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::comrade::{example33, random_comrade, ComradeMatrix};
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::oracle::dense_invert;
use crate::scalar::{ExactRational, ScalarMode};
use crate::sgcminv::{invert_in, Inverse, InvertOptions};

/// Largest order checked against the cubic exact oracle; above it the residual is reported.
pub const ORACLE_MAX_N: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Example33,
    Random { seed: u64, zero_pivot_bias: f64 },
}

impl Family {
    pub fn generate(&self, n: usize) -> Result<ComradeMatrix, Error> {
        match *self {
            Family::Example33 => example33(n),
            Family::Random { seed, zero_pivot_bias } => random_comrade(n, seed, zero_pivot_bias),
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub mode: ScalarMode,
    pub op_count: u64,
    pub wall_time_seconds: f64,
    /// `‖C⁻¹exact − Ĉ⁻¹‖∞` for `n ≤ ORACLE_MAX_N`, else `‖C·Ĉ⁻¹ − I‖∞`.
    pub epsilon: Option<f64>,
}

/// `‖C·S − I‖∞` in binary64.
pub fn residual_norm_f64(c: &ComradeMatrix, s: &DenseMatrix<f64>) -> f64 {
    let n = c.n();
    c.mul_right(s).sub(&DenseMatrix::identity(n)).inf_norm()
}

/// `‖C·S − I‖∞` computed exactly.
pub fn residual_norm_exact(c: &ComradeMatrix, s: &DenseMatrix<ExactRational>) -> ExactRational {
    let n = c.n();
    c.mul_right(s).sub(&DenseMatrix::identity(n)).inf_norm()
}

/// `‖exact − approx‖∞` with the exact matrix rounded to binary64 first.
pub fn error_vs_exact(exact: &DenseMatrix<ExactRational>, approx: &DenseMatrix<f64>) -> f64 {
    exact.to_f64().sub(approx).inf_norm()
}

fn epsilon(c: &ComradeMatrix, inv: &Inverse) -> Result<f64, Error> {
    let n = c.n();
    if n <= ORACLE_MAX_N {
        let reference = dense_invert(&c.to_dense())?;
        Ok(match inv {
            Inverse::Exact { result, .. } => reference.sub(&result.inverse).inf_norm().to_f64(),
            Inverse::Float(r) => error_vs_exact(&reference, &r.inverse),
        })
    } else {
        Ok(match inv {
            Inverse::Exact { result, .. } => residual_norm_exact(c, &result.inverse).to_f64(),
            Inverse::Float(r) => residual_norm_f64(c, &r.inverse),
        })
    }
}

pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub mode: ScalarMode,
    pub parallel_columns: bool,
    pub compute_epsilon: bool,
}

/// Runs one inversion per size. Only the inversion itself is timed.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, Error> {
    let opts = InvertOptions {
        parallel_columns: cfg.parallel_columns,
    };
    cfg.sizes
        .iter()
        .map(|&n| {
            let c = cfg.family.generate(n)?;
            let (inv, elapsed) = timed(|| invert_in(&c, cfg.mode, opts));
            let inv = inv?;
            let epsilon = if cfg.compute_epsilon {
                Some(epsilon(&c, &inv)?)
            } else {
                None
            };
            Ok(BenchRecord {
                n,
                mode: cfg.mode,
                op_count: inv.op_count(),
                wall_time_seconds: elapsed.as_secs_f64(),
                epsilon,
            })
        })
        .collect()
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Writes records as CSV with header `n,mode,op_count,wall_time_seconds,epsilon`.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_and_rows() {
        let records = vec![
            BenchRecord {
                n: 50,
                mode: ScalarMode::Float,
                op_count: 17239,
                wall_time_seconds: 0.5,
                epsilon: Some(1e-9),
            },
            BenchRecord {
                n: 500,
                mode: ScalarMode::Exact,
                op_count: 1,
                wall_time_seconds: 0.0,
                epsilon: None,
            },
        ];
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,mode,op_count,wall_time_seconds,epsilon");
        assert_eq!(lines[1], "50,float,17239,0.5,1e-9");
        assert_eq!(lines[2], "500,exact,1,0.0,");
    }

    #[test]
    fn small_exact_bench_is_exact() {
        let cfg = BenchConfig {
            family: Family::Example33,
            sizes: vec![5, 10],
            mode: ScalarMode::Exact,
            parallel_columns: false,
            compute_epsilon: true,
        };
        let records = run_bench(&cfg).unwrap();
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.epsilon == Some(0.0)));
        assert_eq!(records[1].op_count, 7 * 100 - 50 - 11);
    }
}
