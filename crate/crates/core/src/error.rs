use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid degree profile: {0}")]
    InvalidProfile(String),

    #[error("odd number of darts ({0}); every edge needs two")]
    OddDartCount(u64),

    #[error("letter count {0} is not supported (must be even and between 2 and 64)")]
    UnsupportedLetterCount(usize),

    #[error("invalid matching prefix: {0}")]
    InvalidPrefix(String),

    #[error("count overflow: {0}")]
    Overflow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
