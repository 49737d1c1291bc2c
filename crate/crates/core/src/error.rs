use std::fmt;

/// Crate-wide error type.
///
/// The two variants mirror the two failure modes of the library: a caller
/// handed us arguments outside an operation's domain, or an internal
/// structural guarantee (something a theorem promises) failed to hold.
/// The second kind is always a bug, never a user error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside the operation's domain.
    Domain(String),
    /// An internal consistency check failed; indicates a bug.
    Consistency(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// Process exit code conventionally associated with this error kind:
    /// 2 for domain errors, 3 for consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 2,
            Error::Consistency(_) => 3,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Consistency(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
