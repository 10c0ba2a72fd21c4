use thiserror::Error;

/// Errors raised by field construction, ring arithmetic, code parameters and
/// the brute-force search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("modulus {modulus:?} is not irreducible over F_{p}")]
    Reducible { p: u32, modulus: Vec<u32> },

    #[error("division by zero")]
    DivisionByZero,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("pair reads need length at least 2, got {0}")]
    TooShort(usize),

    #[error("generator exponent {i} outside [0, {n}]")]
    ExponentOutOfRange { i: usize, n: usize },

    #[error("message degree {degree} does not fit code dimension {dimension}")]
    MessageTooLong { degree: usize, dimension: usize },

    #[error(
        "enumeration budget of {budget} codewords exhausted after {visited} \
         (best so far: {best_so_far:?}, not a certified minimum)"
    )]
    BudgetExhausted {
        budget: u64,
        visited: u64,
        best_so_far: Option<usize>,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
