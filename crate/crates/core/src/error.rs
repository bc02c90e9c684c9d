use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceCap { what: &'static str, needed: u128, cap: u128 },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for errors caused by exceeding a configured resource cap.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
