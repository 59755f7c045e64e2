//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different coefficient rings")]
    RingMismatch,
    #[error("constant term {0} is not a unit (need +1 or -1)")]
    NonUnitConstant(String),
    #[error("variable {0} is not nilpotent; the inverse series would not terminate")]
    NonNilpotentVariable(String),
    #[error("series has a nonzero constant term; substitution is undefined")]
    NonzeroConstantTerm,
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("truncation {have} too small, need at least {need}")]
    TruncationTooSmall { have: usize, need: usize },
    #[error("coefficient table is not symmetric at ({i},{j})")]
    AsymmetricCoefficient { i: u32, j: u32 },
    #[error("coefficient of u^{i}v^{j} is not homogeneous of degree {expected}")]
    GradingMismatch { i: u32, j: u32, expected: i64 },
    #[error("a defining relation in degree {degree} does not map to zero (target law is not associative)")]
    RelationNotKilled { degree: i64 },
    #[error("codimension {got} out of range for a factor of dimension {dim}")]
    CodimOutOfRange { got: u32, dim: u32 },
    #[error("zero class has no filtration level")]
    ZeroClass,
    #[error("class does not lie in filtration level {0}")]
    FiltrationViolation(i64),
    #[error("incompatible spaces: {0}")]
    IncompatibleSpaces(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("class is not supported on the given stratum")]
    NotSupported,
    #[error("non-transverse pullback: restricted class fails the filtration-level check")]
    NonTransverse,
}

pub type Result<T> = std::result::Result<T, Error>;
