use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field size {p}^{d} exceeds 2^16")]
    FieldTooLarge { p: u32, d: u32 },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group of order > {limit} cannot be enumerated")]
    EnumerationUnavailable { limit: usize },
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    Budget {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
    #[error("decomposition failed to split within {0} attempts")]
    SplitFailure(usize),
    #[error("module is projective: {0}")]
    Projective(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::Budget { .. } | Error::EnumerationUnavailable { .. }
        )
    }
}
