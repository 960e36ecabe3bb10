//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by lattice construction, solvers, and spectra.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("solver did not converge: {0}")]
    NonConvergence(String),

    #[error("iterate collapsed to the zero field: {0}")]
    Collapse(String),

    #[error("variational problem is ill-posed: {0}")]
    IllPosed(String),

    #[error("Newton step diverged: {0}")]
    Divergence(String),

    #[error("Jacobian is singular: {0}")]
    SingularJacobian(String),

    #[error("structural bound violated: {0}")]
    BoundViolation(String),

    #[error("linear algebra backend failed: {0}")]
    Linalg(String),

    #[error("positivity check failed: {0}")]
    PositivityFailure(String),

    #[error("unconverged profile: {0}")]
    UnconvergedProfile(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}
