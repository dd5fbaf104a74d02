use thiserror::Error;

/// Errors raised by the bound evaluators and verifiers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the requested formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data (frames, spectra, configuration files) failed validation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration is not a certified s-distance or equiangular set.
    #[error("uncertified input: {0}")]
    Uncertified(String),

    /// A sampled rank did not stabilise when the sample count was doubled.
    #[error("unsaturated: sampled rank changed from {first} to {second} when samples doubled")]
    Unsaturated { first: usize, second: usize },

    /// An internal invariant was violated. Always a bug.
    #[error("invariant violated ({name}): {detail}")]
    Invariant { name: &'static str, detail: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn invariant(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            name,
            detail: detail.into(),
        }
    }

    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::InvalidInput(_) => "invalid_input",
            Error::Uncertified(_) => "uncertified",
            Error::Unsaturated { .. } => "unsaturated",
            Error::Invariant { .. } => "invariant",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
