use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("classes live in different ambient lattices: {0}")]
    MismatchedAmbient(String),
    #[error("operation undefined on the zero class")]
    ZeroClass,
    #[error("Hilbert-scheme parameter n must be at least {min}, got {got}")]
    InvalidHilbertParameter { min: u32, got: u32 },
    #[error("BBF square {0} is odd")]
    OddSquare(String),
    #[error("class ({a}, {b}) is not nef on {model}")]
    NotNef {
        a: String,
        b: String,
        model: &'static str,
    },
    #[error("exceptional coefficient {0} is not an integer")]
    NonIntegralRestriction(String),
    #[error("lattice rank {0} unsupported (expected 1 or 2)")]
    RankUnsupported(usize),
    #[error("invalid Gram matrix: {0}")]
    InvalidGram(String),
    #[error("vector length {got} does not match lattice rank {rank}")]
    DimensionMismatch { rank: usize, got: usize },
    #[error("class is not big: q = {0}")]
    NotBig(String),
    #[error("coefficient bound must be at least 1, got {0}")]
    InvalidBound(String),
    #[error("divisibility {0} unsupported for K3^[2]-type (discriminant 2)")]
    UnsupportedDivisibility(String),
    #[error("q/2 = {0} must be positive")]
    NonPositiveSquare(String),
    #[error("bidegree mismatch: expected {expected:?}, got {got:?}")]
    BidegreeMismatch { expected: (u32, u32), got: (u32, u32) },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MismatchedAmbient(_) => "MismatchedAmbient",
            Error::ZeroClass => "ZeroClass",
            Error::InvalidHilbertParameter { .. } => "InvalidHilbertParameter",
            Error::OddSquare(_) => "OddSquare",
            Error::NotNef { .. } => "NotNef",
            Error::NonIntegralRestriction(_) => "NonIntegralRestriction",
            Error::RankUnsupported(_) => "RankUnsupported",
            Error::InvalidGram(_) => "InvalidGram",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotBig(_) => "NotBig",
            Error::InvalidBound(_) => "InvalidBound",
            Error::UnsupportedDivisibility(_) => "UnsupportedDivisibility",
            Error::NonPositiveSquare(_) => "NonPositiveSquare",
            Error::BidegreeMismatch { .. } => "BidegreeMismatch",
            Error::VerificationFailed(_) => "VerificationFailed",
        }
    }
}
