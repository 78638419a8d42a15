use thiserror::Error;

/// Errors produced by geometry construction, quadrature, summation and solves.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("kernel evaluated at a singular configuration: {0}")]
    Singular(String),

    #[error("ill-conditioned quadrature correction (residual {residual:.3e})")]
    IllConditioned { residual: f64 },

    #[error("corner compression failed at level {level}: {reason}")]
    Compression { level: usize, reason: String },

    #[error("linear solver failed: {reason} (residual {residual:.3e} after {iterations} iterations)")]
    SolverFailure {
        reason: String,
        residual: f64,
        iterations: usize,
    },

    #[error("point lies outside the fluid domain: ({0}, {1})")]
    OutsideDomain(f64, f64),

    #[error("interface collision or excessive stiffness: {0}")]
    Collision(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }
}
