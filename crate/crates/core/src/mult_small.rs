//! Multiplicative-error engine for `eps` in `(0, 1]`.
//!
//! Every prefix tuple `I(j)` enters the checkpoint list and stays for
//! `ttl(j) = 2^(q + 2 + beta(j))` symbols, where `q = ceil(log2(2/eps))` and
//! `beta(j)` is the index of the lowest set bit of `j`. Looking back from the
//! current position, the list holds every position in the last `2^(q+2)`
//! and then every `2^x`-th position in the `x`-th doubling interval, which
//! is enough to find a palindrome of length `L / (1 + eps)` with
//! `O(log(n eps) / eps)` tuples.
//!
//! Checkpoints of equal `beta` expire in insertion order, so one FIFO per
//! `beta` finds the single expiring tuple in O(1); three cursor-adjacent
//! checks per symbol suffice.

use crate::checkpoint::{CheckpointList, NodeId};
use crate::engine::{Answer, Engine, PushStats};
use crate::error::ParamError;
use crate::fingerprint::{FingerprintTuple, HashConfig, Symbol};
use crate::queues::TtlQueues;
use crate::scan;
use crate::segments::BinarySegments;

/// Exponent at which time-to-live saturates. A checkpoint with this ttl
/// outlives any stream this crate can index.
pub const TTL_CAP_EXP: u32 = 62;

/// Error parameter and the derived `q = ceil(log2(2 / eps))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TtlParams {
    eps: f64,
    q: u32,
}

impl TtlParams {
    pub fn new(eps: f64) -> Result<Self, ParamError> {
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(ParamError::Epsilon(eps));
        }
        // Smallest q with eps * 2^q >= 2; scaling by a power of two is exact.
        let mut q = 0u32;
        let mut scaled = eps;
        while scaled < 2.0 {
            scaled *= 2.0;
            q += 1;
        }
        Ok(Self { eps, q })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `ttl` of any position whose lowest set bit is `beta`.
    #[inline]
    pub fn ttl_for_class(&self, beta: u32) -> u64 {
        let exp = (self.q + 2).saturating_add(beta).min(TTL_CAP_EXP);
        1 << exp
    }

    /// Length of the first look-back interval, `2^(q+2)`.
    pub fn first_interval(&self) -> u64 {
        self.ttl_for_class(0)
    }
}

/// `2^(q + 2 + beta(j))`, capped at `2^62`.
pub fn ttl(j: u64, params: &TtlParams) -> u64 {
    assert!(j >= 1, "positions are 1-based");
    params.ttl_for_class(j.trailing_zeros())
}

/// Real-time multiplicative engine for `eps <= 1`.
#[derive(Debug, Clone)]
pub struct MultSmall {
    cfg: HashConfig,
    params: TtlParams,
    list: CheckpointList,
    segments: BinarySegments,
    queues: TtlQueues,
    cursor: Option<NodeId>,
    current: FingerprintTuple,
    answer: Answer,
    stats: PushStats,
}

impl MultSmall {
    pub fn new(cfg: HashConfig, eps: f64) -> Result<Self, ParamError> {
        let params = TtlParams::new(eps)?;
        let current = cfg.initial_tuple();
        Ok(Self {
            cfg,
            params,
            list: CheckpointList::new(),
            segments: BinarySegments::new(),
            queues: TtlQueues::new(),
            cursor: None,
            current,
            answer: Answer::EMPTY,
            stats: PushStats::default(),
        })
    }

    pub fn params(&self) -> &TtlParams {
        &self.params
    }

    /// Checkpoint tuples, newest first.
    pub fn checkpoints(&self) -> impl Iterator<Item = &FingerprintTuple> {
        self.list.iter()
    }

    pub fn checkpoint_count(&self) -> usize {
        self.list.len()
    }

    /// Binary segments of the number of symbols pushed.
    pub fn segments(&self) -> &BinarySegments {
        &self.segments
    }
}

impl Engine for MultSmall {
    fn push(&mut self, a: Symbol) {
        let i = self.current.i;
        let mut stats = PushStats::default();
        let id = self.list.push_front(self.current);
        if i == 1 {
            self.cursor = Some(id);
        }
        self.segments.increment();
        let beta = self.segments.beta().expect("counter is positive");
        // Only a checkpoint of the same class can expire now.
        if let Some(head) = self.queues.front(beta) {
            if i - self.list.get(head).i == self.params.ttl_for_class(beta) {
                self.queues.pop(beta);
                scan::delete(&mut self.list, &mut self.cursor, head);
                stats.deletions += 1;
            }
        }
        self.queues.push(beta, id);

        self.current = self.cfg.extend(&self.current, a);
        if i == 1 && self.cfg.is_self_palindrome(a) {
            self.answer = Answer::new(1, 1);
        }
        scan::scan(
            &self.cfg,
            &self.list,
            &mut self.cursor,
            &self.current,
            &mut self.answer,
            3,
            &mut stats,
        );
        self.stats = stats;
    }

    fn answer(&self) -> Answer {
        self.answer
    }

    fn pushed(&self) -> u64 {
        self.current.i - 1
    }

    fn space_words(&self) -> usize {
        FingerprintTuple::WORDS * (self.list.len() + 1)
            + self.queues.total()
            + 2 * self.segments.len()
            + 6
    }

    fn last_stats(&self) -> PushStats {
        self.stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_from_eps() {
        assert_eq!(TtlParams::new(1.0).unwrap().q(), 1);
        assert_eq!(TtlParams::new(0.5).unwrap().q(), 2);
        assert_eq!(TtlParams::new(0.3).unwrap().q(), 3);
        assert_eq!(TtlParams::new(0.25).unwrap().q(), 3);
        assert!(TtlParams::new(0.0).is_err());
        assert!(TtlParams::new(1.5).is_err());
        assert!(TtlParams::new(f64::NAN).is_err());
    }

    #[test]
    fn ttl_values() {
        let q1 = TtlParams::new(1.0).unwrap();
        assert_eq!(ttl(28, &q1), 32);
        assert_eq!(ttl(1, &q1), 8);
        let q2 = TtlParams::new(0.5).unwrap();
        assert_eq!(ttl(1 << 10, &q2), 1 << 14);
        assert_eq!(ttl(1 << 63, &q2), 1 << TTL_CAP_EXP);
    }

    #[test]
    fn ttl_window_uniqueness() {
        // In every window [a, a + 2^b) exactly one j has ttl(j) >= 2^(q+2+b).
        let p = TtlParams::new(1.0).unwrap();
        for b in 0..=12u32 {
            let threshold = 1u64 << (p.q() + 2 + b);
            for a in 1..=3000u64 {
                let hits = (a..a + (1 << b))
                    .filter(|&j| ttl(j, &p) >= threshold)
                    .count();
                assert_eq!(hits, 1, "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn expiry_times_are_injective() {
        let p = TtlParams::new(1.0).unwrap();
        let mut seen = std::collections::HashSet::new();
        for x in 1..=1u64 << 16 {
            assert!(seen.insert(x + ttl(x, &p)), "collision at {x}");
        }
    }

    #[test]
    fn checkpoint_lifetime_and_layout() {
        // q = 1: I(28) stays until iteration 60.
        let mut m = MultSmall::new(HashConfig::from_seed(1), 1.0).unwrap();
        for i in 1..=59u64 {
            m.push(i % 3);
            assert!(m.checkpoints().any(|t| t.i == 28) == (28..60).contains(&i));
        }
        let p = *m.params();
        let kept: Vec<u64> = m.checkpoints().map(|t| t.i).collect();
        let expected: Vec<u64> = (1..=59u64).rev().filter(|&j| j + ttl(j, &p) > 59).collect();
        assert_eq!(kept, expected);
    }

    #[test]
    fn approximation_on_small_inputs() {
        let cases = [("abacaba", 4u64), ("aaaaaaaa", 4), ("", 0)];
        for (s, min_len) in cases {
            let mut m = MultSmall::new(HashConfig::from_seed(2), 1.0).unwrap();
            m.extend_from(s.bytes().map(Symbol::from));
            assert!(m.answer().len >= min_len, "{s}");
        }
    }
}
