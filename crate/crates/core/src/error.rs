use thiserror::Error;

/// Invalid construction parameters for an engine, config or generator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("additive error E must be at least 2, got {0}")]
    AdditiveError(u64),
    #[error("multiplicative error must be positive and finite, got {0}")]
    Epsilon(f64),
    #[error("k-ary schedule needs eps >= 7, got {0}")]
    KaryEpsilon(f64),
    #[error("window m must be at least 1")]
    Window,
    #[error("modulus {0} is not a prime below 2^61")]
    Modulus(u64),
    #[error("hash base {r} is not in [1, {p})")]
    Base { r: u64, p: u64 },
    #[error("complement map is not an involution at symbol {0}")]
    Complement(u64),
    #[error("alphabet size must be at least 2, got {0}")]
    Alphabet(u64),
    #[error("planted palindrome length {planted} exceeds stream length {n}")]
    Planted { planted: u64, n: u64 },
}
