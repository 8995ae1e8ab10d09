use thiserror::Error;

/// Errors raised while building or verifying designs and coherence values.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("matrix dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not normalized (| |v|^2 - 1 | = {deviation:.3e})")]
    NotNormalized { deviation: f64 },

    #[error("state is not pure (| tr rho^2 - 1 | = {deviation:.3e})")]
    NotPure { deviation: f64 },

    #[error("not a density matrix: {0}")]
    NotDensity(String),

    #[error("basis is not orthonormal (max Gram deviation {deviation:.3e})")]
    NotOrthonormal { deviation: f64 },

    #[error("unsupported dimension {0}; expected one of 2, 3, 8")]
    UnsupportedDimension(usize),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("no non-degenerate generic combination found after {attempts} seeds (last gap {gap:.3e})")]
    DegenerateCombination { attempts: usize, gap: f64 },

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
