//! Crate-wide error type.

use thiserror::Error;

/// Errors raised across the arithmetic, polynomial, Groebner and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("term order mismatch: operands carry different stored orders; re-sort explicitly with with_order")]
    OrderMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("evaluation point has {got} coordinates, ring has {expected} variables")]
    EvalArity { expected: usize, got: usize },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("monomial exponent overflow")]
    ExponentOverflow,

    #[error("operation requires a homogeneous input")]
    NotHomogeneous,

    #[error("reducer basis contains a zero polynomial")]
    ZeroReducer,

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("empty list: {0}")]
    EmptyList(String),

    #[error("elimination block size {k} out of range for a ring with {nvars} variables")]
    ElimRange { k: usize, nvars: usize },

    #[error("basis element degree exceeded the configured cap {cap}")]
    DegreeCapExceeded { cap: u64 },

    #[error("all projective coordinates are zero")]
    DegeneratePoint,

    #[error("duplicate point: {0}")]
    DuplicatePoint(String),

    #[error("degenerate line set: {0}")]
    DegenerateLines(String),

    #[error("retry budget exhausted while sampling distinct points")]
    RetryBudgetExceeded,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
