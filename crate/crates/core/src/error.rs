use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Values are rendered into strings at the point of failure so the error type
/// stays independent of the scalar backend.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid precision: {digits} digits requested, at least {min} required")]
    InvalidPrecision { digits: u32, min: u32 },

    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: String },

    #[error("{function}: domain error: {reason}")]
    Domain { function: &'static str, reason: String },

    #[error("{what}: no convergence after {terms} terms (partial sum {partial}, tail bound {tail_bound})")]
    NonConvergence {
        what: &'static str,
        terms: u64,
        partial: String,
        tail_bound: String,
    },

    #[error("{what}: integrand does not decay along the contour (|f| = {magnitude} at |Im s| = {height})")]
    Divergence {
        what: &'static str,
        magnitude: String,
        height: String,
    },

    #[error("residue at {pole}: value changed by {delta} when the radius was halved")]
    UnstableResidue { pole: String, delta: String },

    #[error("unusable data: {0}")]
    UnusableData(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("arithmetic produced a non-finite value in {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }

    pub(crate) fn pole(function: &'static str, at: impl Into<String>) -> Self {
        Error::Pole {
            function,
            at: at.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
