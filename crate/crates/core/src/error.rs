use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("interval partitions are defined only for a nonempty ground set")]
    EmptyGroundSet,

    #[error("partition covers {expected} points but {got} arguments were given")]
    TupleLengthMismatch { expected: usize, got: usize },

    #[error("moment of order {needed} requested but only {available} are available")]
    MomentOrderExceeded { needed: usize, available: usize },

    #[error("cumulants take at least one entry")]
    EmptyEntries,

    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
