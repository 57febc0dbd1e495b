use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("operands belong to different base fields")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("truncation guard {guard} too small: certificate requires {required}")]
    GuardTooSmall { guard: i64, required: i64 },
    #[error("epsilon exceeds rho")]
    EpsAboveRho,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("golden mismatch in suite {suite} at record {line}: expected {expected:?}, got {actual:?}")]
    GoldenMismatch {
        suite: String,
        line: usize,
        expected: String,
        actual: String,
    },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precision(msg: impl Into<String>) -> Error {
    Error::PrecisionExhausted(msg.into())
}
