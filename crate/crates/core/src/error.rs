use thiserror::Error;

/// Errors produced by the comrade library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("comrade matrix order must be at least 3, got {0}")]
    Order(usize),

    #[error("`{field}` must have {expected} entries, got {actual}")]
    Shape {
        field: &'static str,
        expected: usize,
        actual: usize,
    },

    /// A pivot vanished in a mode that cannot perturb it. Index is 1-based.
    #[error("zero pivot at index {0}; retry in symbolic mode")]
    ZeroPivot(usize),

    /// A superdiagonal entry used as a divisor vanished. Index is 1-based.
    #[error("zero alpha at index {0}; retry in symbolic mode")]
    ZeroAlpha(usize),

    #[error("matrix is singular")]
    Singular,

    #[error("pole at t=0: a reduced denominator vanishes at the substitution point")]
    PoleAtZero,

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("invalid rational `{0}`")]
    ParseRational(String),

    /// A malformed matrix file. `location` names the offending field and index.
    #[error("{location}: {message}")]
    Format { location: String, message: String },

    #[error("non-finite value {value} at ({row}, {col}) cannot be written exactly")]
    NonFinite { row: usize, col: usize, value: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
