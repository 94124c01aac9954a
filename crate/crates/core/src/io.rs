//! JSON file formats.
//!
//! Comrade matrix: `{"n": 4, "beta": [...], "alpha": [...], "gamma": [...], "a": [...]}`
//! with entries as rational strings (`"-3/2"`, `"5"`). `gamma` lists `γ2…γn` and `a`
//! lists `a3…an`.
//!
//! Dense matrix: `{"n": 4, "rows": [["1", "0", ...], ...]}`, row-major.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::comrade::ComradeMatrix;
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::scalar::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub beta: Vec<String>,
    pub alpha: Vec<String>,
    pub gamma: Vec<String>,
    pub a: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DenseFile {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

fn format_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Format {
        location: location.into(),
        message: message.into(),
    }
}

fn parse_field(field: &str, values: &[String], expected: usize) -> Result<Vec<ExactRational>, Error> {
    if values.len() != expected {
        return Err(format_error(
            field,
            format!("expected {expected} entries, got {}", values.len()),
        ));
    }
    values
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.parse()
                .map_err(|_| format_error(format!("{field}[{i}]"), format!("`{s}` is not a rational")))
        })
        .collect()
}

impl MatrixFile {
    pub fn from_matrix(c: &ComradeMatrix) -> Self {
        let strs = |v: &[ExactRational]| v.iter().map(ToString::to_string).collect();
        Self {
            n: c.n(),
            beta: strs(c.betas()),
            alpha: strs(c.alphas()),
            gamma: strs(c.gammas()),
            a: strs(c.a_coeffs()),
        }
    }

    pub fn to_matrix(&self) -> Result<ComradeMatrix, Error> {
        let n = self.n;
        if n < 3 {
            return Err(Error::Order(n));
        }
        ComradeMatrix::new(
            n,
            parse_field("beta", &self.beta, n)?,
            parse_field("alpha", &self.alpha, n - 1)?,
            parse_field("gamma", &self.gamma, n - 1)?,
            parse_field("a", &self.a, n - 2)?,
        )
    }
}

impl DenseFile {
    pub fn from_matrix(m: &DenseMatrix<ExactRational>) -> Self {
        Self {
            n: m.n(),
            rows: m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    /// Writes each double as the exact rational it represents.
    pub fn from_f64_matrix(m: &DenseMatrix<f64>) -> Result<Self, Error> {
        let n = m.n();
        let exact = DenseMatrix::from_fn(n, |i, j| (i, j));
        let exact = exact.try_map(|&(i, j)| {
            let value = *m.get(i, j);
            ExactRational::from_f64(value).ok_or(Error::NonFinite {
                row: i + 1,
                col: j + 1,
                value,
            })
        })?;
        Ok(Self::from_matrix(&exact))
    }

    pub fn to_matrix(&self) -> Result<DenseMatrix<ExactRational>, Error> {
        if self.rows.len() != self.n {
            return Err(format_error(
                "rows",
                format!("expected {} rows, got {}", self.n, self.rows.len()),
            ));
        }
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (i, row) in self.rows.iter().enumerate() {
            entries.extend(parse_field(&format!("rows[{i}]"), row, self.n)?);
        }
        DenseMatrix::new(self.n, entries)
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text)
        .map_err(|e| format_error(format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

pub fn parse_matrix_str(text: &str) -> Result<ComradeMatrix, Error> {
    parse_json::<MatrixFile>(text)?.to_matrix()
}

pub fn parse_matrix(path: impl AsRef<Path>) -> Result<ComradeMatrix, Error> {
    parse_matrix_str(&fs::read_to_string(path)?)
}

pub fn matrix_to_string(c: &ComradeMatrix) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_matrix(c)).expect("string fields serialize") + "\n"
}

pub fn write_matrix(c: &ComradeMatrix, path: impl AsRef<Path>) -> Result<(), Error> {
    fs::write(path, matrix_to_string(c))?;
    Ok(())
}

pub fn parse_dense_str(text: &str) -> Result<DenseMatrix<ExactRational>, Error> {
    parse_json::<DenseFile>(text)?.to_matrix()
}

pub fn parse_dense(path: impl AsRef<Path>) -> Result<DenseMatrix<ExactRational>, Error> {
    parse_dense_str(&fs::read_to_string(path)?)
}

pub fn write_dense_file(file: &DenseFile, path: impl AsRef<Path>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(file).expect("string fields serialize") + "\n";
    fs::write(path, text)?;
    Ok(())
}

pub fn write_dense(m: &DenseMatrix<ExactRational>, path: impl AsRef<Path>) -> Result<(), Error> {
    write_dense_file(&DenseFile::from_matrix(m), path)
}
