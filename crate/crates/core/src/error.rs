use thiserror::Error;

use crate::monomial::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no roots to take a resultant over")]
    ZeroPolynomial,
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("cannot factor zero")]
    FactorZero,
    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: u64, got: u64 },
    #[error("search over {candidates} multisets exceeds the bound of {bound}")]
    SearchBoundExceeded { candidates: u128, bound: u128 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension {dim} is outside the supported range for this operation (max {max})")]
    DimensionTooLarge { dim: u64, max: u64 },
    #[error("degree {degree} is outside 0 < d < {q}")]
    DegreeOutOfRange { degree: u64, q: u64 },
    #[error("composition has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("composition has weight zero")]
    EmptyComposition,
    #[error("enumeration budget of {budget} classes exceeded at degree {degree} ({classes} classes)")]
    BudgetExceeded {
        degree: u64,
        classes: u128,
        budget: u128,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
