use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at a = {point}")]
    DenominatorVanishes { point: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot evaluate at a = 0")]
    EvaluationAtZero,

    #[error("linear system has no solution")]
    NoSolution,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("relation violated: {0}")]
    RelationViolation(String),

    #[error("internal error: {0}")]
    InternalError(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
