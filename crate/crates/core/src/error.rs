//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an index must be a nonempty tuple of positive integers")]
    EmptyIndex,
    #[error("index parts must be >= 1")]
    ZeroPart,
    #[error("length mismatch: index has depth {depth}, tuple has length {len}")]
    LengthMismatch { depth: usize, len: usize },
    #[error("word {word:?} does not encode an index (must be nonempty and end in 1)")]
    InvalidWord { word: String },
    #[error("invalid letter {0:?}: words are over the alphabet {{0, 1}}")]
    BadLetter(char),
    #[error("cannot parse {0:?} as an index")]
    BadIndex(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precision must be >= 1")]
    ZeroPrecision,
    #[error("{value} is not a unit modulo {p}^{n}")]
    NonUnit { value: String, p: u64, n: u32 },
    #[error("denominator {den} is divisible by p = {p}")]
    NonIntegral { den: String, p: u64 },
    #[error("modulus mismatch: ({p_left}, {n_left}) vs ({p_right}, {n_right})")]
    ModulusMismatch {
        p_left: u64,
        n_left: u32,
        p_right: u64,
        n_right: u32,
    },
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },
    #[error("substituting 0 into a variable that occurs with a negative exponent")]
    ZeroToNegativePower,
    #[error("(1 - t)^e is not a polynomial for e < 0")]
    OneMinusNegativePower,
    #[error("cannot drop variable {var}: it occurs with a nonzero exponent")]
    VarInUse { var: usize },
    #[error("p = 2: the coefficient 1/2 is not invertible")]
    HalfAtTwo,
    #[error("word is not in the y-terminated subalgebra")]
    NotInH1,
    #[error("argument {arg} must satisfy 1 <= arg < p = {p}")]
    ArgOutOfRange { arg: u64, p: u64 },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}
