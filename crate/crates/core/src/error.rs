use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("session denominator mismatch: {0} vs {1}")]
    SessionMismatch(u32, u32),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("exponent {exp} is not on the 1/{den} lattice")]
    OffLattice { exp: String, den: u32 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("convention fault: {0}")]
    Convention(String),

    #[error("spectrum: {0}")]
    Spectrum(String),

    #[error("size cap exceeded: {size} > {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
