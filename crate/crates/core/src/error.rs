use thiserror::Error;

/// Largest degree for which dense linear algebra over the group algebra is attempted.
pub const MAX_DEGREE: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("n = {n} exceeds the supported ceiling of {max}")]
    Capacity { n: usize, max: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("partition ({0}) is not {1}-regular")]
    NotRegular(String, u64),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element does not lie in the descent algebra: {0}")]
    NotInDescentAlgebra(String),
    #[error("generator g does not satisfy g^2 = c g with c nonzero")]
    NotQuasiIdempotent,
    #[error("not a genuine character: {0}")]
    NotACharacter(String),
    #[error("the radical did not become nilpotent within {0} steps")]
    NotNilpotent(usize),
    #[error("idempotent lifting did not converge within {0} steps")]
    LiftDiverged(usize),
    #[error("wrong weight: expected {expected}, got {got}")]
    Weight { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::Capacity { n, max: MAX_DEGREE })
    } else {
        Ok(())
    }
}
