use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("images do not form a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("invalid sub-permutation matrix: {0}")]
    InvalidSubPermutation(String),
    #[error("rank {r} exceeds min({m}, {n})")]
    RankTooLarge { r: usize, m: usize, n: usize },
    #[error("factorization strategy does not reveal the rank profile matrix")]
    StrategyNotRevealing,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
