use thiserror::Error;

/// Errors raised by quaternion operations and the solvers built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero: operand `{operand}` has (near-)zero norm")]
    DivisionByZero { operand: String },

    #[error("square root of the zero quaternion is not defined")]
    ZeroInput,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite component in `{0}`")]
    NonFinite(&'static str),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
