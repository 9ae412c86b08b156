use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// Each variant maps onto one of the CLI exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("representation is not weakly symmetric")]
    NotWeaklySymmetric,

    #[error("group not finite within cap {cap}")]
    GroupNotFinite { cap: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("epsilon assertion failure: {0}")]
    Epsilon(String),

    #[error("degree bound violated: {0}")]
    BoundViolation(String),

    #[error("verification failed at degree {degree}: {detail}")]
    Verification { degree: u32, detail: String },

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// 1 = validation, 2 = verification mismatch, 3 = internal assertion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_)
            | Error::NotWeaklySymmetric
            | Error::GroupNotFinite { .. }
            | Error::LengthMismatch { .. } => 1,
            Error::Verification { .. } => 2,
            Error::NotDivisible(_)
            | Error::Epsilon(_)
            | Error::BoundViolation(_)
            | Error::Internal(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
