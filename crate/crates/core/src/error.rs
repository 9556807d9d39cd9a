use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal group parameters: {0}")]
    IllegalParams(String),
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    EnumerationCapExceeded { order: u128, cap: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("linear form is identically zero")]
    ZeroForm,
    #[error("linear algebra cap exceeded: {0}")]
    CapExceeded(String),
    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),
    #[error("direction is singular: some root vanishes on {0}")]
    SingularDirection(String),
    #[error("parameter {0} is singular")]
    SingularParameter(String),
    #[error("weight {0} is not in the lattice coset of the family")]
    OffLattice(String),
    #[error("limit undefined: series has pole order {pole} greater than d = {d}")]
    DUnderflow { d: i64, pole: i64 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("weight {0} is not in the dominant chamber C")]
    NotInC(String),
    #[error("partition {0} is not a valid nilpotent orbit label")]
    InvalidPartition(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
