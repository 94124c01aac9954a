//! Counted field arithmetic.

use std::cell::Cell;

use crate::error::Error;
use crate::scalar::Scalar;

/// Performs field operations and tallies them.
///
/// Additions, subtractions, multiplications and divisions each count as one
/// operation. Negation is free.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Counter {
    ops: Cell<u64>,
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    pub fn absorb(&self, other: &Counter) {
        self.bump_by(other.ops());
    }

    fn bump_by(&self, k: u64) {
        self.ops.set(self.ops.get() + k);
    }

    pub fn add<S: Scalar>(&self, a: &S, b: &S) -> S {
        self.bump_by(1);
        a.add(b)
    }

    pub fn sub<S: Scalar>(&self, a: &S, b: &S) -> S {
        self.bump_by(1);
        a.sub(b)
    }

    pub fn mul<S: Scalar>(&self, a: &S, b: &S) -> S {
        self.bump_by(1);
        a.mul(b)
    }

    pub fn div<S: Scalar>(&self, a: &S, b: &S) -> Result<S, Error> {
        self.bump_by(1);
        a.checked_div(b).ok_or(Error::DivisionByZero)
    }
}
