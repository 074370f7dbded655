use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedRootSystem(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("quantum Chevalley rule not available for {0}")]
    UnsupportedQuantumCase(String),
    #[error("excess intersection required: {0}")]
    ExcessIntersection(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("linear system has no unique solution: {0}")]
    Singular(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
