use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("empty word")]
    EmptyWord,
    #[error("block lengths must be positive")]
    ZeroBlockLength,
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("rank input mixes degrees or variable counts")]
    MixedShapes,
    #[error("element is not a Lie polynomial")]
    NotLie,
    #[error("weight {weight} is too small for D_{}", 2 * .r + 1)]
    WeightTooSmall { weight: usize, r: usize },
    #[error("split point {r} out of range for {n} variables")]
    SplitOutOfRange { r: usize, n: usize },
    #[error("generator index must be at least 1")]
    ZeroGeneratorIndex,
    #[error("invalid substitution: {0}")]
    BadSubstitution(String),
    #[error("monomial has a zero exponent; z-words need positive exponents")]
    ZeroExponent,
    #[error("input mixes block degrees")]
    MixedBlockDegree,
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("bounds too small: {0}")]
    BoundsTooSmall(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
