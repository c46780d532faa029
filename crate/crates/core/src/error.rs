use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A root or eigenvalue search failed to converge or may have skipped a root.
    #[error("solver failure: {0}")]
    Solver(String),
    /// An operation requiring a simple eigenvalue hit a (near-)degenerate one.
    #[error("degenerate eigenvalue: {0}")]
    Degenerate(String),
    /// Invalid configuration of a discretization grid or sweep.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
