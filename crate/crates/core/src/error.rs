//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph document parse error: {0}")]
    Parse(String),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not irreducible: no positive-weight path {0}")]
    Reducible(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("series diverges: {0}")]
    DivergentSeries(String),

    #[error("singular matrix in {0}")]
    Singular(String),

    #[error("quadrature failed to reach tolerance {tol:e} on [{a}, {b}] (error estimate {err:e})")]
    Quadrature { a: f64, b: f64, tol: f64, err: f64 },

    #[error("sampler failure: {0}")]
    Sampler(String),

    #[error("state space too large: {got} states exceeds dense limit {limit}")]
    StateSpace { got: usize, limit: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Coarse classification used by the CLI for exit codes: `true` for
    /// input/validation problems, `false` for numeric failures.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::UnknownLabel(_)
                | Error::InvalidGraph(_)
                | Error::Reducible(_)
                | Error::InvalidArgument(_)
                | Error::Precondition(_)
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}
