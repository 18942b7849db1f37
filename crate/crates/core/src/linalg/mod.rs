//! Exact scalars and dense matrices over Q, F_p and their simple extensions.

mod field;
mod matrix;

pub use field::{ArithOp, Extension, Field, FieldKind, Scalar};
pub use matrix::{AffineSolution, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinPoly(String),
    #[error("zero divisor: the minimal polynomial is reducible")]
    ZeroDivisor,
    #[error("parse error: {0}")]
    Parse(String),
}
