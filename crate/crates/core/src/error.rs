use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (cycle strings, JSON files, numbers).
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} exceeds cap: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// An internal consistency check failed. These should never fire.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("numerical degeneracy: {message} (residual {residual:e})")]
    NumericalDegeneracy { message: String, residual: f64 },

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("constraint violated: {0}")]
    ConstraintViolated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code under the CLI contract:
    /// 1 verification failure, 2 parse, 3 precondition, 4 cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Json(_) | Error::Io(_) => 2,
            Error::NotSubgroup(_)
            | Error::InvalidAction(_)
            | Error::Precondition(_)
            | Error::GroupMismatch
            | Error::ConstraintViolated(_) => 3,
            Error::CapExceeded { .. } => 4,
            Error::InvariantViolation(_) | Error::NumericalDegeneracy { .. } => 1,
        }
    }
}
