use thiserror::Error;

/// Errors raised by the numerical kernels.
///
/// Inequality failures are never errors; they are recorded as outcomes by the
/// corpus. These variants cover violated preconditions and solver breakdowns.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not Hermitian (defect {defect:.3e}, allowed {allowed:.3e})")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("matrix is not positive semidefinite (lambda_min = {lambda_min:.6e})")]
    NotPsd { lambda_min: f64 },

    #[error("matrix is not positive definite (lambda_min = {lambda_min:.6e}, lambda_max = {lambda_max:.6e})")]
    NotPositiveDefinite { lambda_min: f64, lambda_max: f64 },

    #[error("permanent requested for n = {n}; the limit is {limit}")]
    TooLargeForPermanent { n: usize, limit: usize },

    #[error("elementary symmetric function e_{k} undefined for n = {n}")]
    ElemSymOrder { k: usize, n: usize },

    #[error("polynomial root finder did not converge after {iterations} iterations")]
    RootFindingFailed { iterations: usize },

    #[error("off-diagonal blocks differ (defect {defect:.3e})")]
    OffDiagonalMismatch { defect: f64 },

    #[error("recovered block is not similar to the expected block (eigenvalue defect {defect:.3e})")]
    SimilarityMismatch { defect: f64 },

    #[error("geometric mean lost symmetry (correction {correction:.3e})")]
    AsymmetricMean { correction: f64 },

    #[error("invalid factor pair: {0}")]
    InvalidPair(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed matrix file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
