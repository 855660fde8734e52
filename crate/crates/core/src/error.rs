use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised while validating inputs to the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} is not invertible modulo {n}: gcd is {gcd}")]
    NonCoprime { a: BigInt, n: BigInt, gcd: BigInt },

    #[error("weights must satisfy r <= q <= p, got ({r}, {q}, {p})")]
    NotSorted { r: BigInt, q: BigInt, p: BigInt },

    #[error("weights must be pairwise coprime: gcd({a}, {b}) = {gcd}")]
    NotPairwiseCoprime { a: BigInt, b: BigInt, gcd: BigInt },

    #[error("{what} must be a positive integer, got {value}")]
    NonPositive { what: &'static str, value: BigInt },

    #[error("invalid pi-surd: {0}")]
    InvalidPiSurd(&'static str),

    #[error("{what} = {value} is out of range for this routine")]
    OutOfRange { what: &'static str, value: BigInt },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
