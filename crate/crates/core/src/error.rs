use thiserror::Error;

/// Errors raised by state construction, symmetry analysis and measures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("amplitude vector has zero norm")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("state norm deviates from 1 by {deviation:e}, beyond the allowed slack")]
    NotNormalized { deviation: f64 },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystem(String),
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("matrix is not positive semidefinite (minimum eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("argument out of domain: {0}")]
    DomainError(String),
    #[error("not fully entangled: Schmidt rank {rank} < {required}")]
    NotFullyEntangled { rank: usize, required: usize },
    #[error("wrong orientation: side A has dimension {d_a} > side B dimension {d_b}")]
    WrongOrientation { d_a: usize, d_b: usize },
    #[error("operator is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("operator is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("optimizer did not converge in any restart (best value {best})")]
    OptimizerFailure { best: f64 },
    #[error("perturbative expansion is singular: |U11| = {modulus:e}")]
    SingularExpansion { modulus: f64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
