//! Reference time-to-live engines that rescan the whole list every symbol.
//!
//! They keep exactly the same checkpoints as [`MultSmall`](crate::MultSmall)
//! and [`MultLarge`](crate::MultLarge) but find expired tuples and palindromes
//! by brute force, which makes them the differential baseline for the
//! real-time engines.

use crate::engine::{Answer, Engine, PushStats};
use crate::error::ParamError;
use crate::fingerprint::{FingerprintTuple, HashConfig, Symbol};
use crate::mult_large::{ttl_prime, KaryParams};
use crate::mult_small::{ttl, TtlParams};

/// A time-to-live schedule over 1-based positions.
pub trait Schedule {
    fn ttl(&self, j: u64) -> u64;
}

impl Schedule for TtlParams {
    fn ttl(&self, j: u64) -> u64 {
        ttl(j, self)
    }
}

impl Schedule for KaryParams {
    fn ttl(&self, j: u64) -> u64 {
        ttl_prime(j, self)
    }
}

#[derive(Debug, Clone)]
pub struct FullScan<S> {
    cfg: HashConfig,
    schedule: S,
    /// Oldest first.
    list: Vec<FingerprintTuple>,
    current: FingerprintTuple,
    answer: Answer,
    stats: PushStats,
}

impl<S: Schedule> FullScan<S> {
    pub fn with_schedule(cfg: HashConfig, schedule: S) -> Self {
        let current = cfg.initial_tuple();
        Self {
            cfg,
            schedule,
            list: Vec::new(),
            current,
            answer: Answer::EMPTY,
            stats: PushStats::default(),
        }
    }

    /// Checkpoint tuples, newest first.
    pub fn checkpoints(&self) -> impl Iterator<Item = &FingerprintTuple> {
        self.list.iter().rev()
    }
}

impl FullScan<TtlParams> {
    pub fn binary(cfg: HashConfig, eps: f64) -> Result<Self, ParamError> {
        Ok(Self::with_schedule(cfg, TtlParams::new(eps)?))
    }
}

impl FullScan<KaryParams> {
    pub fn kary(cfg: HashConfig, eps: f64) -> Result<Self, ParamError> {
        Ok(Self::with_schedule(cfg, KaryParams::new(eps)?))
    }
}

impl<S: Schedule> Engine for FullScan<S> {
    fn push(&mut self, a: Symbol) {
        let i = self.current.i;
        let mut stats = PushStats::default();
        self.list.push(self.current);
        let before = self.list.len();
        let schedule = &self.schedule;
        self.list.retain(|v| i - v.i != schedule.ttl(v.i));
        stats.deletions = (before - self.list.len()) as u32;

        self.current = self.cfg.extend(&self.current, a);
        if i == 1 && self.cfg.is_self_palindrome(a) {
            self.answer = Answer::new(1, 1);
        }
        for v in self.list.iter().rev() {
            stats.checks += 1;
            let candidate = i - v.i + 1;
            if self.cfg.is_palindrome(v, &self.current) && self.answer.len < candidate {
                self.answer = Answer::new(v.i, candidate);
            }
        }
        self.stats = stats;
    }

    fn answer(&self) -> Answer {
        self.answer
    }

    fn pushed(&self) -> u64 {
        self.current.i - 1
    }

    fn space_words(&self) -> usize {
        FingerprintTuple::WORDS * (self.list.len() + 1) + 4
    }

    fn last_stats(&self) -> PushStats {
        self.stats
    }
}

/// Full-scan run with the binary schedule, `eps` in `(0, 1]`.
pub fn mbasic_run(cfg: &HashConfig, stream: &[Symbol], eps: f64) -> Result<Answer, ParamError> {
    let mut engine = FullScan::binary(cfg.clone(), eps)?;
    engine.extend_from(stream.iter().copied());
    Ok(engine.answer())
}

/// Full-scan run with the base-`k` schedule, `eps >= 7`.
pub fn mbasic_prime_run(
    cfg: &HashConfig,
    stream: &[Symbol],
    eps: f64,
) -> Result<Answer, ParamError> {
    let mut engine = FullScan::kary(cfg.clone(), eps)?;
    engine.extend_from(stream.iter().copied());
    Ok(engine.answer())
}
