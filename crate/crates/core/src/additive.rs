//! Additive-error engine.
//!
//! Every `t = floor(E/2)`-th prefix tuple is kept as a checkpoint, so any
//! palindrome `S[a..b]` has a checkpoint in `[a, a + t)` and its inner part
//! starting there is found, losing less than `2t <= E` symbols.
//!
//! The answer grows by at most `2t` per symbol, which leaves only two
//! checkpoints per symbol that can improve it. [`Additive`] tracks them with a
//! cursor; [`AdditiveBasic`] scans the whole list and serves as a reference.

use crate::checkpoint::{CheckpointList, NodeId};
use crate::engine::{Answer, Engine, PushStats};
use crate::error::ParamError;
use crate::fingerprint::{FingerprintTuple, HashConfig, Symbol};
use crate::scan;

fn spacing(error: u64) -> Result<u64, ParamError> {
    if error < 2 {
        return Err(ParamError::AdditiveError(error));
    }
    Ok(error / 2)
}

/// Real-time additive engine using `O(n / E)` checkpoints.
#[derive(Debug, Clone)]
pub struct Additive {
    cfg: HashConfig,
    error: u64,
    spacing: u64,
    list: CheckpointList,
    cursor: Option<NodeId>,
    current: FingerprintTuple,
    answer: Answer,
    stats: PushStats,
}

impl Additive {
    pub fn new(cfg: HashConfig, error: u64) -> Result<Self, ParamError> {
        let spacing = spacing(error)?;
        let current = cfg.initial_tuple();
        Ok(Self {
            cfg,
            error,
            spacing,
            list: CheckpointList::new(),
            cursor: None,
            current,
            answer: Answer::EMPTY,
            stats: PushStats::default(),
        })
    }

    pub fn error(&self) -> u64 {
        self.error
    }

    /// Checkpoint spacing `floor(E/2)`.
    pub fn spacing(&self) -> u64 {
        self.spacing
    }

    pub fn checkpoint_count(&self) -> usize {
        self.list.len()
    }

    /// Checkpoint tuples, newest first.
    pub fn checkpoints(&self) -> impl Iterator<Item = &FingerprintTuple> {
        self.list.iter()
    }
}

impl Engine for Additive {
    fn push(&mut self, a: Symbol) {
        let i = self.current.i;
        let mut stats = PushStats::default();
        if i % self.spacing == 0 {
            let id = self.list.push_front(self.current);
            if i == self.spacing {
                self.cursor = Some(id);
            }
        }
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
            2,
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
        // list, current tuple, answer, cursor, E, t, i
        FingerprintTuple::WORDS * (self.list.len() + 1) + 6
    }

    fn last_stats(&self) -> PushStats {
        self.stats
    }
}

/// Reference additive engine that checks every checkpoint on every symbol.
#[derive(Debug, Clone)]
pub struct AdditiveBasic {
    cfg: HashConfig,
    spacing: u64,
    /// Oldest first.
    list: Vec<FingerprintTuple>,
    current: FingerprintTuple,
    answer: Answer,
    stats: PushStats,
}

impl AdditiveBasic {
    pub fn new(cfg: HashConfig, error: u64) -> Result<Self, ParamError> {
        let spacing = spacing(error)?;
        let current = cfg.initial_tuple();
        Ok(Self {
            cfg,
            spacing,
            list: Vec::new(),
            current,
            answer: Answer::EMPTY,
            stats: PushStats::default(),
        })
    }
}

impl Engine for AdditiveBasic {
    fn push(&mut self, a: Symbol) {
        let i = self.current.i;
        if i % self.spacing == 0 {
            self.list.push(self.current);
        }
        self.current = self.cfg.extend(&self.current, a);
        if i == 1 && self.cfg.is_self_palindrome(a) {
            self.answer = Answer::new(1, 1);
        }
        let mut stats = PushStats::default();
        for v in self.list.iter().rev() {
            let candidate = i - v.i + 1;
            stats.checks += 1;
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
        FingerprintTuple::WORDS * (self.list.len() + 1) + 5
    }

    fn last_stats(&self) -> PushStats {
        self.stats
    }
}

/// Runs [`AdditiveBasic`] over a whole stream.
pub fn abasic_run(cfg: &HashConfig, stream: &[Symbol], error: u64) -> Result<Answer, ParamError> {
    let mut engine = AdditiveBasic::new(cfg.clone(), error)?;
    engine.extend_from(stream.iter().copied());
    Ok(engine.answer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bytes(s: &str) -> Vec<Symbol> {
        s.bytes().map(Symbol::from).collect()
    }

    fn run(s: &str, error: u64) -> Answer {
        let mut a = Additive::new(HashConfig::from_seed(11), error).unwrap();
        a.extend_from(bytes(s));
        a.answer()
    }

    #[test]
    fn spacing_from_error() {
        let cfg = HashConfig::from_seed(0);
        assert_eq!(Additive::new(cfg.clone(), 2).unwrap().spacing(), 1);
        assert_eq!(Additive::new(cfg.clone(), 7).unwrap().spacing(), 3);
        assert_eq!(
            Additive::new(cfg.clone(), 1).unwrap_err(),
            ParamError::AdditiveError(1)
        );
        assert!(AdditiveBasic::new(cfg, 0).is_err());
    }

    #[test]
    fn unit_spacing_is_exact() {
        assert_eq!(run("abacaba", 2), Answer::new(1, 7));
        assert_eq!(run("xabacabay", 2).len, 7);
    }

    #[test]
    fn coarse_spacing_reports_real_palindrome() {
        let s = "abacaba";
        let ans = run(s, 4);
        assert!(ans.len >= 3);
        let w = &s.as_bytes()[ans.range()];
        assert!(w.iter().eq(w.iter().rev()));
    }

    #[test]
    fn short_and_empty_streams() {
        assert_eq!(run("", 2), Answer::EMPTY);
        assert_eq!(run("ab", 2).len, 1);
        assert_eq!(run("ab", 10), Answer::new(1, 1));
        assert!(run("aaaa", 2).len >= 2);
        let cfg = HashConfig::from_seed(1);
        assert_eq!(abasic_run(&cfg, &[], 2).unwrap(), Answer::EMPTY);
        assert_eq!(abasic_run(&cfg, &bytes("abacaba"), 2).unwrap().len, 7);
    }

    #[test]
    fn checkpoint_count_tracks_spacing() {
        let mut a = Additive::new(HashConfig::from_seed(2), 7).unwrap();
        for (n, b) in bytes("the quick brown fox jumps").into_iter().enumerate() {
            a.push(b);
            assert_eq!(a.checkpoint_count() as u64, (n as u64 + 1) / 3);
        }
        let pos: Vec<u64> = a.checkpoints().map(|t| t.i).collect();
        assert!(pos.windows(2).all(|w| w[0] == w[1] + 3));
    }
}
