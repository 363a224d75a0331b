use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing field: {0}")]
    MissingField(&'static str),
    #[error("degree error: {0}")]
    Degree(String),
    #[error(
        "unbounded enumeration: algebra is not simply connected, a word-length cutoff is required"
    )]
    Unbounded,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("non-integer h-exponent {num}/4 for a labeling of {monomial}")]
    HExponent { num: i64, monomial: String },
    #[error("invalid expression: {0}")]
    Expression(String),
}

pub type Result<T> = std::result::Result<T, Error>;
