use thiserror::Error;

/// Errors surfaced by the symbolic and numerical layers.
#[derive(Debug, Error)]
pub enum CoreError {
    /// A caller passed an out-of-range index, mismatched dimensions, or an
    /// otherwise malformed argument.
    #[error("argument error: {0}")]
    Argument(String),

    /// A documented precondition of an operation does not hold for the data,
    /// e.g. a non-skew matrix handed to the unitary propagator.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Structural validation failed, e.g. a bracket table violating the
    /// Jacobi identity or a non-skew Hamiltonian at load time.
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
