//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong when building or combining exact values.
///
/// Messages name the violated invariant so they can be surfaced verbatim
/// by command-line tooling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime; only prime p is supported")]
    NotPrime(u64),

    #[error("prime mismatch: left value lives over p={left}, right over p={right}")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("cannot mix distinct irrational symbols `{left}` and `{right}`")]
    SymbolMismatch { left: String, right: String },

    #[error("{0} must be nonzero")]
    ZeroInput(&'static str),

    #[error("digit {digit} out of range for base p={p}")]
    DigitOutOfRange { digit: String, p: u64 },

    #[error("recovered digit {digit} is not an integer in {{0,..,p-1}}: input not a valid parameter sequence")]
    DigitNotIntegral { digit: String },

    #[error("value {0} outside [0,1)")]
    ValueOutOfRange(String),

    #[error("denominator of {0} contains a prime other than p: not an element of Z[1/p]")]
    DenominatorNotPPower(String),

    #[error("denominator of {0} is divisible by p: not a p-adic integer")]
    DenominatorDivisibleByP(String),

    #[error("p-adic number has negative valuation: not a p-adic integer")]
    NegativeValuation,

    #[error("solenoid point of depth {depth} cannot be paired at level {requested}")]
    InsufficientDepth { depth: usize, requested: usize },

    #[error("solenoid point violates compatibility: p*phi_{} is not phi_{} modulo 1", .level + 1, .level)]
    IncompatiblePoint { level: usize },

    #[error("tail rule {rule} is inconsistent with the supplied values: {detail}")]
    InconsistentTail { rule: &'static str, detail: String },

    #[error("operation requires an irrational (symbolic) alpha_0, got a rational one")]
    SymbolicRequired,

    #[error("module trace {0} is not positive")]
    NotPositive(String),

    #[error("sign of {0} undecidable from the stored approximant")]
    UndecidableSign(String),

    #[error("cannot invert {0} within rational Laurent expressions in one symbol")]
    NonInvertibleSymbolic(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
