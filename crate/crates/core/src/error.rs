//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by partition, operator, measure, and simulation code.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violated a precondition (size mismatch, out-of-range index, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact enumeration would exceed the configured capacity guard.
    #[error("capacity guard exceeded: {0}")]
    Capacity(String),

    /// A measure or run configuration is invalid or unusable.
    #[error("configuration error: {0}")]
    Config(String),

    /// A text form could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A map table failed the strong Lipschitz check; carries a witness pair
    /// of inputs whose image overlap does not contain the input overlap.
    #[error("not strongly Lipschitz: witness inputs {lhs:?} and {rhs:?}")]
    NotStronglyLipschitz { lhs: String, rhs: String },

    /// A matrix transpose left the space of partition operators.
    #[error("not a partition operator: {0}")]
    NotPartitionOperator(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
