use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagmaError {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("entry {entry} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, entry: usize, order: usize },
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("{0:?} is not a permutation")]
    NotPermutation(Vec<usize>),
    #[error("modulus {0} is even, so 2 has no inverse")]
    EvenModulus(usize),
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("coefficient {name} must be nonzero modulo {modulus}")]
    ZeroCoefficient { name: &'static str, modulus: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON magma: {0}")]
    Json(String),
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("{operation} supports orders up to {max}, got {order}")]
    UnsupportedOrder { operation: &'static str, order: usize, max: usize },
    #[error("{0} is not a subgroupoid (empty or not closed)")]
    NotClosed(String),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("{0}")]
    LongRunRequired(String),
}

pub type Result<T, E = MagmaError> = std::result::Result<T, E>;
