use crate::fingerprint::Symbol;

/// Best palindrome found so far: 1-based start and length.
///
/// `len == 0` only before any symbol has produced a palindrome.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Answer {
    pub pos: u64,
    pub len: u64,
}

impl Answer {
    pub const EMPTY: Answer = Answer { pos: 0, len: 0 };

    pub fn new(pos: u64, len: u64) -> Self {
        Self { pos, len }
    }

    /// The half-open 0-based index range of the witness.
    pub fn range(&self) -> std::ops::Range<usize> {
        if self.len == 0 {
            return 0..0;
        }
        let start = (self.pos - 1) as usize;
        start..start + self.len as usize
    }
}

/// Work done by the most recent push.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PushStats {
    /// Cursor moves towards older checkpoints.
    pub cursor_steps: u32,
    /// Fingerprint palindrome checks.
    pub checks: u32,
    /// Checkpoints dropped from the list.
    pub deletions: u32,
    /// Manacher inner-loop iterations.
    pub inner_iterations: u32,
}

impl PushStats {
    pub fn ops(&self) -> u32 {
        self.cursor_steps + self.checks + self.deletions + self.inner_iterations
    }

    pub fn max(self, other: PushStats) -> PushStats {
        PushStats {
            cursor_steps: self.cursor_steps.max(other.cursor_steps),
            checks: self.checks.max(other.checks),
            deletions: self.deletions.max(other.deletions),
            inner_iterations: self.inner_iterations.max(other.inner_iterations),
        }
    }
}

/// A one-pass longest-palindrome engine.
pub trait Engine {
    fn push(&mut self, a: Symbol);

    fn answer(&self) -> Answer;

    /// Symbols pushed so far.
    fn pushed(&self) -> u64;

    /// Current working memory in machine words.
    fn space_words(&self) -> usize;

    fn last_stats(&self) -> PushStats;

    fn extend_from<I: IntoIterator<Item = Symbol>>(&mut self, symbols: I)
    where
        Self: Sized,
    {
        for a in symbols {
            self.push(a);
        }
    }
}
