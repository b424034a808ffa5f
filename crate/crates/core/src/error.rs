use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("profile dimension mismatch: orbits span {actual}, expected {expected}")]
    DimensionMismatch { expected: u64, actual: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("discriminant vanishes identically")]
    NonReducedModel,

    #[error("model is not minimal at {place}: v(A) = {va}, v(B) = {vb}; minimalize the model first")]
    NonMinimal { place: String, va: String, vb: String },

    #[error("unsupported characteristic {0}: only 0 and primes >= 5 are handled")]
    UnsupportedCharacteristic(u64),

    #[error("base action does not permute the places: {0}")]
    NonInvariantPlaces(String),

    #[error("substitution does not preserve the equation: monomial {monomial}")]
    NonEquivariant { monomial: String },

    #[error("inconsistent action: {0}")]
    InconsistentAction(String),

    #[error("reducible fibre of type {0}: point count would miss exceptional components")]
    ReducibleFibre(String),

    #[error("characteristic {0} must be handled by the wild case")]
    WildCharacteristic(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
