use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// Requested limit exceeds the materialization cap; use streaming mode.
    Capacity { limit: u64, cap: u64 },
    /// The configured integer width cannot hold the requested sums.
    Precision(String),
    /// Least-squares basis too ill-conditioned to trust the fit.
    FitQuality(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Capacity { limit, cap } => write!(
                f,
                "limit {limit} exceeds materialization cap {cap}; use streaming mode"
            ),
            Error::Precision(msg) => write!(f, "precision: {msg}"),
            Error::FitQuality(msg) => write!(f, "fit quality: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
