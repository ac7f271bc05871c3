use thiserror::Error;

/// Errors produced by the group engine and everything built on top of it.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("a group needs at least one generator")]
    EmptyGenerators,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order {order} exceeds the element cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported field order {0} (prime powers up to 32 are supported)")]
    UnsupportedField(u64),
    #[error("subgroup is not normal in the parent group")]
    NotNormal,
    #[error("subgroup is not elementary abelian")]
    NotElementaryAbelian,
    #[error("element is not a member of the group")]
    NotMember,
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("invalid data file: {0}")]
    InvalidData(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
