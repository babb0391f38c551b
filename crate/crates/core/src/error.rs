use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    NotBijection(String),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("{0} is not contained in {1}")]
    NotSubgroup(String, String),
    #[error("subgroup {0} is not core-free")]
    NotCoreFree(String),
    #[error("index {index} exceeds cap {cap}")]
    IndexCap { index: String, cap: u64 },
    #[error("{0} does not divide the group order")]
    BadPrime(u64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing data: {0}")]
    Missing(String),
    #[error("not an integer: {0}")]
    NotIntegral(String),
    #[error("data mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
