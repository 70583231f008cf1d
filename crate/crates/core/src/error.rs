use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not a prime modulus in 2..=2^31")]
    NotPrime(u64),
    #[error("operation requires a prime field")]
    UnsupportedField,
    #[error("enumeration needs {needed} elements but the cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("empty list")]
    EmptyList,
    #[error("morphism has not been certified")]
    NotCertified,
    #[error("matrix is not a morphism of Hom-Lie algebras")]
    NotAMorphism,
    #[error("the cut at level {level} is not a subspace")]
    NotSubspaceLeveled { level: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("rejection sampling gave up after {0} attempts")]
    RetriesExhausted(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn dims(expected: usize, found: usize) -> Self {
        Error::DimensionMismatch { expected, found }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
