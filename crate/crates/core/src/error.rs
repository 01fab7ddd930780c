use thiserror::Error;

/// Errors raised by the algebra, simulation and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroModulus,
    #[error("polynomial must have degree >= 1")]
    ConstantPolynomial,
    #[error("polynomial {0} is not irreducible")]
    Reducible(String),
    #[error("polynomial {0} is not primitive")]
    NotPrimitive(String),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    ParsePoly { input: String, reason: String },
    #[error("cannot parse bit string {0:?}: expected only '0' and '1'")]
    ParseBits(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("register degree {0} is outside the supported range 1..=64")]
    UnsupportedDegree(isize),
    #[error("register lengths {l1} and {l2} are not coprime")]
    NotCoprime { l1: usize, l2: usize },
    #[error("control register produces no ones")]
    ZeroControlSeed,
    #[error("invalid decimation: stride {stride}, offset {offset}")]
    InvalidDecimation { stride: usize, offset: usize },
    #[error("rule vector must contain at least one cell")]
    EmptyRuleVector,
    #[error("window of {len} bits is too short, need at least {needed}")]
    WindowTooShort { len: usize, needed: usize },
    #[error("expected {expected} solution coefficients, got {actual}")]
    CoefficientCount { expected: usize, actual: usize },
    #[error("linear complexity bounds need L1 >= 2, got {0}")]
    BoundsUndefined(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("synthesis for {poly} found {count} rule vectors: {found:?}")]
    UnexpectedSynthesisCount {
        poly: String,
        count: usize,
        found: Vec<String>,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
