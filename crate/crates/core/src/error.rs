use thiserror::Error;

/// Errors raised by the simulator, gate library, decomposition engine and solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VqlsError {
    #[error("qubit count {n} outside supported range {min}..={max}")]
    Size { n: usize, min: usize, max: usize },
    #[error("gate placement: {0}")]
    GatePlacement(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NonHermitian(f64),
    #[error("center-switch span must be at least 2, got {0}")]
    InvalidSpan(usize),
    #[error("multiqubit scheme requires n ≥ 2")]
    MultiqubitTooSmall,
    #[error("matrix is singular (pivot {pivot:e} at row {row})")]
    Singular { row: usize, pivot: f64 },
    #[error("degenerate state: ⟨ψ|ψ⟩ = {0:e}")]
    DegenerateState(f64),
    #[error("parameter length mismatch: expected {expected}, got {got}")]
    ParamLength { expected: usize, got: usize },
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = VqlsError> = std::result::Result<T, E>;
