//! Deterministic real-time windowed Manacher.
//!
//! The online Manacher variant tracks the center `c` of the longest
//! palindromic suffix. Adding a letter walks `c` forward over half-integer
//! centers until some suffix palindrome extends; amortized this is at most
//! three inner steps per letter, but a single letter can take many. Here
//! letters wait in a queue and every push runs at most three inner steps, so
//! the work per symbol is constant while the queue stays below `m/2 + 2`.
//!
//! Palindromes of length `m` or `m + 1` are never extended. The procedure
//! then only looks `m` symbols and `2m + 3` half-centers back, so both live
//! in circular buffers. The result is exact whenever the longest palindrome
//! is shorter than `m`; otherwise a genuine palindrome of length `m` or
//! `m + 1` is reported. Letters still queued at the end cannot improve it.
//!
//! Centers are stored doubled (`c2 = 2c`), and each center stores the
//! length of its palindrome rather than a radius, so even and odd lengths
//! need no separate cases.

use std::collections::VecDeque;

use crate::engine::{Answer, Engine, PushStats};
use crate::error::ParamError;
use crate::fingerprint::Symbol;

/// Left endmarker, outside every alphabet.
pub const ENDMARKER: Symbol = Symbol::MAX;

/// Inner iterations allowed per push.
pub const STEPS_PER_PUSH: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactKind {
    /// The reported palindrome is a longest one.
    Exact,
    /// The longest palindrome has length at least `m`; the reported one has
    /// length `m` or `m + 1`.
    AtLeast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactResult {
    pub kind: ExactKind,
    pub pos: u64,
    pub len: u64,
}

impl ExactResult {
    pub fn is_exact(&self) -> bool {
        self.kind == ExactKind::Exact
    }

    pub fn answer(&self) -> Answer {
        Answer::new(self.pos, self.len)
    }
}

#[derive(Debug, Clone)]
pub struct WindowedManacher {
    m: u64,
    /// `S[pos]` at `pos % (m + 1)`; slot 0 starts as the endmarker.
    symbols: Vec<Symbol>,
    /// Palindrome length at doubled center `c2`, at `c2 % lengths.len()`.
    lengths: Vec<u64>,
    queue: VecDeque<Symbol>,
    /// Letter whose insertion is in progress.
    active: Option<Symbol>,
    /// Doubled center where the current insertion started.
    s2: u64,
    /// Doubled center of the longest suffix palindrome.
    c2: u64,
    /// Letters consumed by the inner procedure.
    n: u64,
    pushed: u64,
    best: Answer,
    highest_c2: u64,
    stats: PushStats,
    total_inner: u64,
    max_queue: usize,
}

impl WindowedManacher {
    pub fn new(m: u64) -> Result<Self, ParamError> {
        if m < 1 {
            return Err(ParamError::Window);
        }
        let mut symbols = vec![0; (m + 1) as usize];
        symbols[0] = ENDMARKER;
        Ok(Self {
            m,
            symbols,
            lengths: vec![0; (2 * m + 4) as usize],
            queue: VecDeque::with_capacity((m / 2 + 3) as usize),
            active: None,
            s2: 0,
            c2: 0,
            n: 0,
            pushed: 0,
            best: Answer::EMPTY,
            highest_c2: 0,
            stats: PushStats::default(),
            total_inner: 0,
            max_queue: 0,
        })
    }

    pub fn window(&self) -> u64 {
        self.m
    }

    /// Classification of the stream so far; queued letters are not drained.
    pub fn finish(&self) -> ExactResult {
        let kind = if self.best.len >= self.m {
            ExactKind::AtLeast
        } else {
            ExactKind::Exact
        };
        ExactResult {
            kind,
            pos: self.best.pos,
            len: self.best.len,
        }
    }

    pub fn queue_len(&self) -> usize {
        self.queue.len()
    }

    pub fn max_queue_len(&self) -> usize {
        self.max_queue
    }

    pub fn total_inner_iterations(&self) -> u64 {
        self.total_inner
    }

    fn symbol(&self, pos: u64) -> Symbol {
        debug_assert!(
            pos <= self.n && pos + self.m + 1 > self.n,
            "symbol {pos} left the window"
        );
        self.symbols[(pos % (self.m + 1)) as usize]
    }

    fn length_at(&self, c2: u64) -> u64 {
        if c2 < 2 {
            return 0;
        }
        let cap = self.lengths.len() as u64;
        debug_assert!(
            c2 <= self.highest_c2 && c2 + cap > self.highest_c2,
            "center {c2} left the window"
        );
        self.lengths[(c2 % cap) as usize]
    }

    fn set_length(&mut self, c2: u64, len: u64) {
        let cap = self.lengths.len() as u64;
        self.lengths[(c2 % cap) as usize] = len;
        self.highest_c2 = self.highest_c2.max(c2);
    }

    /// One pass of the inner loop at center `c2`. Returns true when the
    /// longest suffix palindrome of `S[1..n+1]` has been found.
    fn step(&mut self, a: Symbol) -> bool {
        let (n, c2) = (self.n, self.c2);
        let bound = 2 * n + 1 - c2;
        let len = if bound == 0 {
            0
        } else {
            self.length_at(2 * self.s2 - c2).min(bound)
        };
        self.set_length(c2, len);
        if c2 + len - 1 == 2 * n && len < self.m && self.symbol(n - len) == a {
            self.set_length(c2, len + 2);
            return true;
        }
        self.c2 += 1;
        if self.c2 == 2 * n + 2 {
            self.set_length(self.c2, 1);
            return true;
        }
        false
    }

    fn complete(&mut self, a: Symbol) {
        self.n += 1;
        let slot = (self.n % (self.m + 1)) as usize;
        self.symbols[slot] = a;
        self.active = None;
        let len = self.length_at(self.c2);
        if len > self.best.len {
            self.best = Answer::new((self.c2 + 1 - len) / 2, len);
        }
    }
}

impl Engine for WindowedManacher {
    fn push(&mut self, a: Symbol) {
        self.pushed += 1;
        let mut stats = PushStats::default();
        if self.pushed == 1 {
            self.n = 1;
            self.symbols[1 % (self.m + 1) as usize] = a;
            self.c2 = 2;
            self.set_length(2, 1);
            self.best = Answer::new(1, 1);
            self.stats = stats;
            return;
        }
        self.queue.push_back(a);
        self.max_queue = self.max_queue.max(self.queue.len());
        while stats.inner_iterations < STEPS_PER_PUSH {
            let letter = match self.active {
                Some(letter) => letter,
                None => match self.queue.pop_front() {
                    Some(letter) => {
                        self.active = Some(letter);
                        self.s2 = self.c2;
                        letter
                    }
                    None => break,
                },
            };
            stats.inner_iterations += 1;
            if self.step(letter) {
                self.complete(letter);
            }
        }
        self.total_inner += u64::from(stats.inner_iterations);
        self.stats = stats;
    }

    fn answer(&self) -> Answer {
        self.best
    }

    fn pushed(&self) -> u64 {
        self.pushed
    }

    fn space_words(&self) -> usize {
        // buffers, queue, and m, s2, c2, n, pushed, best, active
        self.symbols.len() + self.lengths.len() + self.queue.len() + 8
    }

    fn last_stats(&self) -> PushStats {
        self.stats
    }
}

/// Non-real-time windowed Manacher over an in-memory string.
///
/// With `window = None` nothing is clamped and the result is the exact
/// longest palindrome (leftmost among equals).
pub fn ebasic_run(stream: &[Symbol], window: Option<u64>) -> Answer {
    let Some((_, rest)) = stream.split_first() else {
        return Answer::EMPTY;
    };
    let symbol = |pos: u64| {
        if pos == 0 {
            ENDMARKER
        } else {
            stream[pos as usize - 1]
        }
    };
    let mut lengths = vec![0u64; 2 * stream.len() + 3];
    let (mut n, mut c2) = (1u64, 2u64);
    lengths[2] = 1;
    let mut best = Answer::new(1, 1);
    for &a in rest {
        let s2 = c2;
        loop {
            if c2 == 2 * n + 2 {
                lengths[c2 as usize] = 1;
                break;
            }
            let bound = 2 * n + 1 - c2;
            let len = if bound == 0 {
                0
            } else {
                lengths[(2 * s2 - c2) as usize].min(bound)
            };
            lengths[c2 as usize] = len;
            let open = window.is_none_or(|m| len < m);
            if c2 + len - 1 == 2 * n && open && symbol(n - len) == a {
                lengths[c2 as usize] = len + 2;
                break;
            }
            c2 += 1;
        }
        n += 1;
        let len = lengths[c2 as usize];
        if len > best.len {
            best = Answer::new((c2 + 1 - len) / 2, len);
        }
    }
    best
}
