//! Determinant and inverse of general comrade matrices.
//!
//! A comrade matrix is tridiagonal except for a dense last row. This crate factors
//! it as `L·U` in O(n), reads the determinant off the pivots, and builds the full
//! inverse in O(n²): two columns by substitution through the factors, the rest by a
//! three-term column recursion.
//!
//! Both algorithms run over any [`Scalar`] field. Over [`RationalFunction`] a pivot
//! or divisor that vanishes is replaced by an indeterminate `t` and results are
//! evaluated at `t = 0`, so the algorithms never break down on a nonsingular input.
//! [`oracle`] holds an independent dense elimination used for verification.
//!
//! ```
//! use comrade::{ComradeMatrix, ExactRational, RationalFunction};
//!
//! let c = ComradeMatrix::from_strs(4, &["0", "-1", "1", "3"], &["1", "5", "2"], &["2", "3", "5"], &["1", "-1"])?;
//! let det = comrade::determinant::<RationalFunction>(&c)?;
//! assert_eq!(det.value, ExactRational::from_integer(24));
//!
//! let inv = comrade::invert::<RationalFunction>(&c)?;
//! assert_eq!(inv.inverse.get(0, 0).to_string(), "-7/6");
//! # Ok::<(), comrade::Error>(())
//! ```

pub mod arith;
pub mod bench;
pub mod cli;
pub mod comrade;
pub mod dense;
mod error;
pub mod facdet;
pub mod io;
pub mod oracle;
pub mod scalar;
pub mod sgcminv;

pub use crate::arith::Counter;
pub use crate::comrade::{example33, make_comrade, random_comrade, ComradeMatrix};
pub use crate::dense::DenseMatrix;
pub use crate::error::{Error, Result};
pub use crate::facdet::{
    determinant, determinant_in, factorize, reconstruct_lu, DetReport, Determinant, LUFactors, Substitution,
    SubstitutionKind,
};
pub use crate::scalar::{
    poly_gcd, rf_eval_at_zero, ExactRational, Number, Polynomial, RationalFunction, Scalar, ScalarMode,
};
pub use crate::sgcminv::{
    invert, invert_in, invert_with, last_two_columns, remaining_columns, BasisVector, ComradeParams, Inverse,
    InverseResult, InvertOptions,
};
