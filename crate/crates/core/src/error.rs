use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A state drifted outside its invariants by more than the tolerated amount.
    #[error("numerical instability: {what} drift {drift:e} exceeds tolerance")]
    NumericalInstability { what: &'static str, drift: f64 },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error(
        "state at tf = {tf} is not stationary (diagonal moved by {drift:e} over the last unit \
         of time, needs < {limit:e}); increase tf"
    )]
    NotStationary { tf: u32, drift: f64, limit: f64 },

    #[error("convergence time search exceeded tf = {tf}")]
    ConvergenceExceeded { tf: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
