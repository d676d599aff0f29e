use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use thiserror::Error;

/// Which end of the `2 < rho <= 3` window a shape ratio fell outside of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoBound {
    /// `rho <= 2`: the smallest side would be zero or negative.
    Lower,
    /// `rho > 3`: the discriminant under the square root is negative.
    Upper,
}

impl std::fmt::Display for RhoBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RhoBound::Lower => f.write_str("must be greater than 2"),
            RhoBound::Upper => f.write_str("must be at most 3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("side lengths must be positive, got ({}, {}, {})", .sides[0], .sides[1], .sides[2])]
    NonPositiveSide { sides: Box<[BigRational; 3]> },

    #[error(
        "sides ({}, {}, {}) violate the strict triangle inequality (degenerate or impossible)",
        .sides[0], .sides[1], .sides[2]
    )]
    TriangleInequalityViolation { sides: Box<[BigRational; 3]> },

    #[error("progression test needs nonzero operands")]
    ZeroOperand,

    #[error("shape ratio rho = {rho} out of range: {bound}")]
    RhoOutOfRange { rho: BigRational, bound: RhoBound },

    #[error("parameters must be positive integers, got d={d}, kappa={kappa}, lambda={lambda}")]
    NonPositive { d: BigInt, kappa: BigInt, lambda: BigInt },

    #[error("kappa={kappa} and lambda={lambda} are not coprime")]
    NotCoprime { kappa: BigUint, lambda: BigUint },

    #[error("lambda/kappa = {lambda}/{kappa} lies strictly between 1 and 3")]
    RatioConditionViolation { kappa: BigUint, lambda: BigUint },

    #[error("d={d} gives non-integer values for kappa={kappa}, lambda={lambda} ({rule})")]
    ParityViolation {
        d: BigUint,
        kappa: BigUint,
        lambda: BigUint,
        rule: &'static str,
    },

    #[error("pairwise gcds {gcds:?} for kappa={kappa}, lambda={lambda} do not match the expected class {expected}")]
    GcdClassMismatch {
        kappa: BigUint,
        lambda: BigUint,
        gcds: [BigUint; 3],
        expected: u32,
    },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    /// Variant name, stable across releases; used in CLI messages and as
    /// the basis for FFI status codes.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPositiveSide { .. } => "NonPositiveSide",
            Error::TriangleInequalityViolation { .. } => "TriangleInequalityViolation",
            Error::ZeroOperand => "ZeroOperand",
            Error::RhoOutOfRange { .. } => "RhoOutOfRange",
            Error::NonPositive { .. } => "NonPositive",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::RatioConditionViolation { .. } => "RatioConditionViolation",
            Error::ParityViolation { .. } => "ParityViolation",
            Error::GcdClassMismatch { .. } => "GcdClassMismatch",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
