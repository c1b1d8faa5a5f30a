//! Multiplicative-error engine for large `eps`, using a base-`k` schedule.
//!
//! `k` is the largest even integer with `k <= (1 + eps) / 2`. A checkpoint at
//! position `j` lives `9/2 * k^b` symbols when `j` has `b > 0` trailing zero
//! digits in base `k`, and 4 symbols otherwise. Every look-back interval of
//! the resulting partition then holds between 3 and 5 checkpoints, giving
//! `O(log n / log(1 + eps))` space.
//!
//! At most two checkpoints expire per symbol: one of class `beta'(i) + 1` and
//! one of class 0.

use crate::checkpoint::{CheckpointList, NodeId};
use crate::engine::{Answer, Engine, PushStats};
use crate::error::ParamError;
use crate::fingerprint::{FingerprintTuple, HashConfig, Symbol};
use crate::queues::TtlQueues;
use crate::scan;
use crate::segments::KarySegments;

/// Largest even `k <= (1 + eps) / 2`. Needs `eps >= 7`, which makes `k >= 4`.
pub fn choose_k(eps: f64) -> Result<u64, ParamError> {
    if eps.is_nan() || eps < 7.0 || eps.is_infinite() {
        return Err(ParamError::KaryEpsilon(eps));
    }
    let half = ((1.0 + eps) / 2.0).floor() as u64;
    Ok(half & !1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KaryParams {
    eps: f64,
    k: u64,
}

impl KaryParams {
    pub fn new(eps: f64) -> Result<Self, ParamError> {
        Ok(Self {
            eps,
            k: choose_k(eps)?,
        })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Trailing zero digits of `j` in base `k`.
    pub fn beta(&self, mut j: u64) -> u32 {
        assert!(j >= 1, "positions are 1-based");
        let mut b = 0;
        while j % self.k == 0 {
            j /= self.k;
            b += 1;
        }
        b
    }

    /// Time-to-live for class `beta`; `u64::MAX` when it overflows.
    #[inline]
    pub fn ttl_for_class(&self, beta: u32) -> u64 {
        if beta == 0 {
            return 4;
        }
        // k is even, so 9/2 * k^b = 9 * (k^b / 2) exactly.
        self.k
            .checked_pow(beta)
            .and_then(|p| (p / 2).checked_mul(9))
            .unwrap_or(u64::MAX)
    }

    /// `9/2 * k^x` for `x >= 1`, the look-back interval boundaries.
    pub fn boundary(&self, x: u32) -> u64 {
        self.ttl_for_class(x)
    }
}

pub fn ttl_prime(j: u64, params: &KaryParams) -> u64 {
    params.ttl_for_class(params.beta(j))
}

/// Real-time multiplicative engine for `eps >= 7`.
#[derive(Debug, Clone)]
pub struct MultLarge {
    cfg: HashConfig,
    params: KaryParams,
    list: CheckpointList,
    segments: KarySegments,
    queues: TtlQueues,
    cursor: Option<NodeId>,
    current: FingerprintTuple,
    answer: Answer,
    stats: PushStats,
}

impl MultLarge {
    pub fn new(cfg: HashConfig, eps: f64) -> Result<Self, ParamError> {
        let params = KaryParams::new(eps)?;
        let current = cfg.initial_tuple();
        Ok(Self {
            cfg,
            params,
            list: CheckpointList::new(),
            segments: KarySegments::new(params.k()),
            queues: TtlQueues::new(),
            cursor: None,
            current,
            answer: Answer::EMPTY,
            stats: PushStats::default(),
        })
    }

    pub fn params(&self) -> &KaryParams {
        &self.params
    }

    pub fn checkpoints(&self) -> impl Iterator<Item = &FingerprintTuple> {
        self.list.iter()
    }

    pub fn checkpoint_count(&self) -> usize {
        self.list.len()
    }

    pub fn segments(&self) -> &KarySegments {
        &self.segments
    }

    fn expire_head(&mut self, class: u32, i: u64, stats: &mut PushStats) {
        let Some(head) = self.queues.front(class) else {
            return;
        };
        if i - self.list.get(head).i == self.params.ttl_for_class(class) {
            self.queues.pop(class);
            scan::delete(&mut self.list, &mut self.cursor, head);
            stats.deletions += 1;
        }
    }
}

impl Engine for MultLarge {
    fn push(&mut self, a: Symbol) {
        let i = self.current.i;
        let mut stats = PushStats::default();
        let id = self.list.push_front(self.current);
        if i == 1 {
            self.cursor = Some(id);
        }
        self.segments.increment();
        let beta = self.segments.beta().expect("counter is positive");
        self.expire_head(beta + 1, i, &mut stats);
        self.expire_head(0, i, &mut stats);
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
            + 7
    }

    fn last_stats(&self) -> PushStats {
        self.stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_selection() {
        assert_eq!(choose_k(7.0).unwrap(), 4);
        assert_eq!(choose_k(9.0).unwrap(), 4);
        assert_eq!(choose_k(15.0).unwrap(), 8);
        assert_eq!(choose_k(100.0).unwrap(), 50);
        assert!(choose_k(6.9).is_err());
        assert!(choose_k(1.0).is_err());
        assert!(MultLarge::new(HashConfig::from_seed(0), 1.0).is_err());
        assert_eq!(
            MultLarge::new(HashConfig::from_seed(0), 7.0)
                .unwrap()
                .params()
                .k(),
            4
        );
    }

    #[test]
    fn k_is_maximal_even() {
        for tenth in 70..2000 {
            let eps = tenth as f64 / 10.0;
            let k = choose_k(eps).unwrap();
            let half = (1.0 + eps) / 2.0;
            assert!(k % 2 == 0 && k >= 4);
            assert!(k as f64 <= half && (k + 2) as f64 > half, "eps = {eps}");
        }
    }

    #[test]
    fn ttl_prime_values() {
        let p = KaryParams::new(7.0).unwrap();
        assert_eq!(ttl_prime(5, &p), 4);
        assert_eq!(ttl_prime(3, &p), 4);
        assert_eq!(ttl_prime(16, &p), 72);
        assert_eq!(ttl_prime(4, &p), 18);
        assert_eq!(p.ttl_for_class(40), u64::MAX);
    }

    #[test]
    fn at_most_two_preimages() {
        for eps in [7.0, 9.0, 15.0] {
            let p = KaryParams::new(eps).unwrap();
            let mut hits: std::collections::HashMap<u64, Vec<u64>> = Default::default();
            for x in 1..=100_000u64 {
                hits.entry(x + ttl_prime(x, &p)).or_default().push(x);
            }
            for (h, xs) in hits {
                assert!(xs.len() <= 2, "{h}: {xs:?}");
                if let [x, y] = xs[..] {
                    let (hi, lo) = if p.beta(x) >= p.beta(y) {
                        (x, y)
                    } else {
                        (y, x)
                    };
                    assert_eq!(p.beta(hi), p.beta(h) + 1);
                    assert_eq!(p.beta(lo), 0);
                }
            }
        }
    }
}
