//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element {value} out of range for GF({q})")]
    ElementOutOfRange { value: u64, q: u64 },

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("division or inversion of zero in GF({q})")]
    DivisionByZero { q: u64 },

    #[error("no irreducible modulus found for p={p}, m={m}")]
    NoModulus { p: u64, m: u32 },

    #[error("modulus of degree {got} is not irreducible or has wrong degree (expected {want})")]
    BadModulus { got: usize, want: u32 },

    #[error("duplicate interpolation point")]
    DuplicatePoint,

    #[error("empty interpolation point set")]
    EmptyInterpolation,

    #[error("message degree {deg} exceeds dimension bound k={k}")]
    DegreeTooLarge { deg: usize, k: usize },

    #[error("cannot puncture an [n,k] code with n = k = {k}")]
    PunctureBelowDimension { k: usize },

    #[error("weight {w} exceeds code length {n}")]
    WeightOutOfRange { w: usize, n: usize },

    #[error("received word has length {got}, code length is {want}")]
    LengthMismatch { got: usize, want: usize },

    #[error("radius {tau} exceeds the decoder limit {limit} ({what})")]
    RadiusTooLarge {
        tau: usize,
        limit: i64,
        what: &'static str,
    },

    #[error(
        "no interpolation multiplicity s <= {smax} attains radius {tau} for an [{n},{k}] code"
    )]
    MultiplicityExhausted {
        n: usize,
        k: usize,
        tau: usize,
        smax: usize,
    },

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("argument of zero is undefined")]
    ZeroArgument,

    #[error("character is trivial (beta = 0)")]
    TrivialCharacter,

    #[error("violated precondition: {0}")]
    Precondition(String),

    #[error("exhaustive search over {required} messages exceeds cap {cap}")]
    CapExceeded { required: u128, cap: u128 },

    #[error("sequences have mismatched lengths: {0} vs {1}")]
    SequenceLengthMismatch(usize, usize),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
