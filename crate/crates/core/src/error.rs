use alloc::string::String;
use core::fmt;

/// Errors raised by the numerical engine.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operands have incompatible shapes.
    Dimension { expected: usize, found: usize },
    /// An argument violates an operation's precondition.
    Argument(String),
    /// A linear solve or consistency check failed beyond tolerance.
    Numerical(String),
    /// A declared structure (e.g. a reduce split) could not be verified.
    Precondition(String),
    /// A catalog identifier is not known.
    UnknownName(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Numerical(msg) => write!(f, "numerical failure: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition not met: {msg}"),
            Error::UnknownName(name) => write!(f, "unknown catalog name `{name}`"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn arg(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
