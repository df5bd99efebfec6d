use thiserror::Error;

/// Errors raised by the root-system, Weyl-group and Schubert computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedRootSystem(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{0} is not a positive root")]
    NotPositive(String),

    #[error("degree mismatch: element has length {length}, multiplicities sum to {sum}")]
    DegreeMismatch { length: usize, sum: usize },

    #[error("multiplicities sum to {sum}, but the root set has {size} elements")]
    SizeMismatch { size: usize, sum: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid multipath: {0}")]
    InvalidMultipath(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration cap of {0} elements exceeded")]
    CapExceeded(usize),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
