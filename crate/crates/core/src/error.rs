use thiserror::Error;

/// Errors raised by the invariant engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate component name `{0}`")]
    DuplicateComponent(String),

    #[error("component `{name}` has nonpositive degree {degree}")]
    NonPositiveDegree { name: String, degree: i64 },

    #[error("component name `{0}` is reserved")]
    ReservedName(String),

    #[error("component `{0}` appears with two different degrees")]
    ComponentConflict(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: u32, right: u32 },

    #[error("ambient dimension must be positive")]
    ZeroAmbient,

    #[error("cohomology index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("divisor of degree {0} is not ample")]
    NotAmple(String),

    #[error("class is not torsion within bound {bound}")]
    NoOrderWithinBound { bound: u64 },

    #[error("cannot decide: {0}")]
    Undecided(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("incompatible twists: {0}")]
    IncompatibleTwists(String),

    #[error("component `{0}` has no defining polynomial")]
    MissingPolynomial(String),

    #[error("polynomial error: {0}")]
    Polynomial(String),

    #[error("basis of size {size} exceeds the limit {limit}")]
    BasisTooLarge { size: u128, limit: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed scenario: {0}")]
    Scenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
