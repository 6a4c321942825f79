use thiserror::Error;

/// Errors produced by the covolume engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("{0} is not the discriminant of an imaginary quadratic field")]
    NonFundamentalDiscriminant(i64),
    #[error("forms have discriminants {left} and {right}")]
    DiscriminantMismatch { left: i64, right: i64 },
    #[error("invalid dimension n = {0}")]
    InvalidDimension(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(alloc::string::String),
    #[error("multiplicity is not determined for odd n = {n} with {ramified} ramified primes")]
    UnknownMultiplicity { n: u32, ramified: usize },
    #[error("fields with discriminants {first} and {second} share the minimal covolume")]
    TieDetected { first: u64, second: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;
