//! Deterministic test inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ParamError;
use crate::fingerprint::Symbol;

/// Prefix of length `d` of `0 1 00 11 000 111 ...`.
///
/// Its longest palindrome grows only like the square root of `d`.
pub fn gen_nu(d: usize) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(d);
    let mut run = 1;
    while out.len() < d {
        for bit in [0, 1] {
            let take = run.min(d - out.len());
            out.extend(std::iter::repeat_n(bit, take));
        }
        run += 1;
    }
    out
}

/// Uniform string over `0..sigma`.
pub fn gen_random(n: usize, sigma: u64, seed: u64) -> Result<Vec<Symbol>, ParamError> {
    if sigma < 2 {
        return Err(ParamError::Alphabet(sigma));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| rng.random_range(0..sigma)).collect())
}

/// Random string with a random palindrome of length `planted` at a random
/// offset.
pub fn gen_planted(
    n: usize,
    sigma: u64,
    seed: u64,
    planted: usize,
) -> Result<Vec<Symbol>, ParamError> {
    if planted > n {
        return Err(ParamError::Planted {
            planted: planted as u64,
            n: n as u64,
        });
    }
    let mut out = gen_random(n, sigma, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let offset = rng.random_range(0..=n - planted);
    let half = planted.div_ceil(2);
    for k in 0..half {
        let a = rng.random_range(0..sigma);
        out[offset + k] = a;
        out[offset + planted - 1 - k] = a;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Nu,
    Random,
    Planted,
}

/// A complete description of one generated input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub length: usize,
    pub sigma: u64,
    pub seed: u64,
    pub planted: usize,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Vec<Symbol>, ParamError> {
        match self.kind {
            GenKind::Nu => Ok(gen_nu(self.length)),
            GenKind::Random => gen_random(self.length, self.sigma, self.seed),
            GenKind::Planted => gen_planted(self.length, self.sigma, self.seed, self.planted),
        }
    }
}
