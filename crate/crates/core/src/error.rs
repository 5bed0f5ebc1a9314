use thiserror::Error;

/// Errors raised by the algebra, geometry and counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid field descriptor: {0}")]
    InvalidField(String),
    #[error("modulus {0} is reducible over GF({1})")]
    ReducibleModulus(String, u64),
    #[error("field of size {0} exceeds the supported table size")]
    FieldTooLarge(u64),
    #[error("characteristic 3 is not supported for Burkhardt computations")]
    CharacteristicThree,
    #[error("unsupported characteristic {0}: {1}")]
    UnsupportedCharacteristic(u64, &'static str),
    #[error("denominator {0} is not invertible in characteristic {1}")]
    DenominatorNotInvertible(String, u64),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("point is not on the Burkhardt quartic")]
    NotOnQuartic,
    #[error("point lies in the base locus of the map")]
    BaseLocus,
    #[error("point lies on Hessian")]
    OnHessian,
    #[error("coordinate condition violated: {0}")]
    Coordinate(String),
    #[error("degenerate certificate for {label}: {reason}")]
    Degenerate { label: String, reason: String },
    #[error("scan of {points} points exceeds the configured cap of {cap}")]
    CapExceeded { points: u128, cap: u128 },
    #[error("linear system has no integral solution: {0}")]
    Unsolvable(String),
    #[error("field has no primitive cube root of unity")]
    NoCubeRoot,
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
