use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature failed to converge within the panel budget. Carries the
    /// best estimate obtained so far and its error bound.
    #[error("quadrature did not converge: value={value}, abs_error={abs_error}")]
    Quadrature { value: f64, abs_error: f64 },

    /// Radial ODE integration could not reach the asymptotic matching region.
    #[error("continuum solver failed: {0}")]
    Solver(String),

    /// Extrapolation of a sequence did not settle.
    #[error("extrapolation did not converge: {0}")]
    Extrapolation(String),

    /// Malformed atom data file; positions are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
