use thiserror::Error;

/// Errors raised by the numerical kernels, coefficient routines and the harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("argument out of supported range: {0}")]
    Range(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("point at the coordinate origin has no {0} coordinates")]
    Origin(&'static str),
    #[error("singular endpoint: {0}")]
    Singularity(String),
    #[error("quadrature did not reach tolerance: {0}")]
    Quadrature(String),
    #[error("bad projection node: {0}")]
    Node(String),
    #[error("series did not converge: {0}")]
    Convergence(String),
    #[error("configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
