use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma has a pole at {x}")]
    Pole { x: f64 },

    #[error("index {requested} exceeds the configured maximum {max}")]
    LimitExceeded { requested: usize, max: usize },

    #[error("requested {requested} power sums but only {available} coefficients are available")]
    InsufficientCoefficients { requested: usize, available: usize },

    #[error("determinant scale must be non-zero")]
    ZeroScale,

    #[error("coefficient series must start with sigma_0 = 1 (got {got})")]
    Unnormalized { got: String },

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("1 - z*lambda vanishes for lambda index {index}")]
    Singular { index: usize },

    #[error("closed form index {k} outside 1..={max}")]
    OutOfRange { k: usize, max: usize },

    #[error("quadrature did not reach {target} digits (estimated error {estimate:e})")]
    AccuracyNotReached { target: u32, estimate: f64 },

    #[error("b0 vanishes to quadrature accuracy (|b0| <= {bound:e})")]
    B0Vanishes { bound: f64 },

    #[error("{0} is not a fundamental discriminant of a non-trivial real primitive character")]
    NotFundamental(i64),

    #[error("invalid character table: {0}")]
    InvalidCharacter(String),

    #[error("no sign change found around zero #{index}")]
    BracketFailure { index: usize },

    #[error("series cancellation at z = {z:e} needs more than {digits} digits")]
    PrecisionExhausted { z: f64, digits: u32 },

    #[error("scan found {found} of {wanted} zeros before giving up")]
    ScanExhausted { found: usize, wanted: usize },

    #[error("precision must be at least {min} digits (got {got})")]
    InvalidPrecision { got: u32, min: u32 },

    #[error("cannot parse '{0}' as a real number")]
    Parse(String),
}
