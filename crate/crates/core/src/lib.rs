//! Real-time streaming algorithms for the longest palindromic substring.
//!
//! Every engine in this crate consumes a stream one symbol at a time, does a
//! worst-case constant amount of work per symbol, and keeps a running answer:
//!
//! * [`Additive`] reports a palindrome of length at least `L - E` using
//!   `O(n / E)` fingerprint checkpoints.
//! * [`MultSmall`] and [`MultLarge`] report a palindrome of length at least
//!   `L / (1 + eps)` using time-to-live checkpointing; [`Multiplicative`]
//!   picks the right one for a given `eps`.
//! * [`WindowedManacher`] is deterministic and exact whenever the longest
//!   palindrome is shorter than its window `m`, using `O(m)` words.
//!
//! The fingerprint engines are Monte Carlo: they compare Karp-Rabin hashes
//! modulo the Mersenne prime `2^61 - 1`, so a wrong answer needs a hash
//! collision. Slow full-scan references ([`AdditiveBasic`], [`FullScan`],
//! [`ebasic_run`]) and offline oracles ([`oracle`]) exist for differential
//! testing.
//!
//! ```
//! use palstream::{Engine, HashConfig, Multiplicative, WindowedManacher};
//!
//! let text = b"xxabacabayy";
//! let mut approx = Multiplicative::new(HashConfig::from_seed(1), 1.0)?;
//! let mut exact = WindowedManacher::new(64)?;
//! for &b in text {
//!     approx.push(b.into());
//!     exact.push(b.into());
//! }
//! assert_eq!(exact.finish().len, 7);
//! assert!(approx.answer().len >= 4);
//! # Ok::<(), palstream::ParamError>(())
//! ```

pub mod additive;
pub mod audit;
pub mod checkpoint;
pub mod engine;
pub mod error;
pub mod exact_window;
pub mod fingerprint;
pub mod full_scan;
pub mod generators;
pub mod mult_large;
pub mod mult_small;
pub mod multiplicative;
pub mod oracle;
pub mod queues;
pub mod segments;

mod scan;

pub use additive::{abasic_run, Additive, AdditiveBasic};
pub use checkpoint::{CheckpointList, NodeId};
pub use engine::{Answer, Engine, PushStats};
pub use error::ParamError;
pub use exact_window::{ebasic_run, ExactKind, ExactResult, WindowedManacher};
pub use fingerprint::{ComplementMap, FingerprintTuple, HashConfig, Symbol, MERSENNE_61};
pub use full_scan::{mbasic_prime_run, mbasic_run, FullScan, Schedule};
pub use generators::{gen_nu, gen_planted, gen_random, GenKind, GenSpec};
pub use mult_large::{choose_k, ttl_prime, KaryParams, MultLarge};
pub use mult_small::{ttl, MultSmall, TtlParams};
pub use multiplicative::Multiplicative;
pub use oracle::{
    is_palindrome_at, oracle_lps, oracle_lps_complement, oracle_lps_naive, OracleResult,
};
pub use segments::{BinarySegments, KarySegments};
