//! Run-length views of an iteration counter with O(1) increment.
//!
//! Both types answer "position of the rightmost nonzero digit" in O(1),
//! which drives the time-to-live schedules. An increment only touches the
//! two lowest runs.

use std::collections::VecDeque;

/// Maximal runs of 1-bits of a counter, least significant first.
///
/// `13369 = 0b11_0100_0011_1001` has segments `[0,0], [3,5], [10,10], [12,13]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BinarySegments {
    runs: VecDeque<(u32, u32)>,
}

impl BinarySegments {
    pub fn new() -> Self {
        Self::default()
    }

    /// Segments of `x`, built by a direct bit scan.
    pub fn from_value(x: u64) -> Self {
        let mut runs = VecDeque::new();
        let mut bit = 0u32;
        let mut rest = x;
        while rest != 0 {
            let zeros = rest.trailing_zeros();
            bit += zeros;
            rest >>= zeros;
            let ones = rest.trailing_ones();
            runs.push_back((bit, bit + ones - 1));
            bit += ones;
            rest = rest.checked_shr(ones).unwrap_or(0);
        }
        Self { runs }
    }

    pub fn value(&self) -> u64 {
        self.runs
            .iter()
            .map(|&(lo, hi)| (u64::MAX >> (63 - hi)) & (u64::MAX << lo))
            .fold(0, |acc, run| acc | run)
    }

    pub fn segments(&self) -> impl ExactSizeIterator<Item = (u32, u32)> + '_ {
        self.runs.iter().copied()
    }

    /// Position of the rightmost 1-bit, `None` for zero.
    pub fn beta(&self) -> Option<u32> {
        self.runs.front().map(|&(lo, _)| lo)
    }

    pub fn increment(&mut self) {
        let Some(&(a, b)) = self.runs.front() else {
            self.runs.push_back((0, 0));
            return;
        };
        match a {
            0 => {
                self.runs.pop_front();
                match self.runs.front_mut() {
                    Some((c, _)) if *c == b + 2 => *c = b + 1,
                    _ => self.runs.push_front((b + 1, b + 1)),
                }
            }
            1 => self.runs[0].0 = 0,
            _ => self.runs.push_front((0, 0)),
        }
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

/// Run-length encoded base-`k` digits of a counter, least significant first.
///
/// Each run is `(digit, length)`; adjacent runs hold different digits and the
/// top run is never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KarySegments {
    k: u64,
    runs: VecDeque<(u64, u32)>,
}

impl KarySegments {
    pub fn new(k: u64) -> Self {
        assert!(k >= 2, "base must be at least 2");
        Self {
            k,
            runs: VecDeque::new(),
        }
    }

    /// RLE of `x` built by direct base-`k` decomposition.
    pub fn from_value(k: u64, mut x: u64) -> Self {
        let mut seg = Self::new(k);
        while x > 0 {
            let d = x % k;
            match seg.runs.back_mut() {
                Some((digit, len)) if *digit == d => *len += 1,
                _ => seg.runs.push_back((d, 1)),
            }
            x /= k;
        }
        seg
    }

    pub fn base(&self) -> u64 {
        self.k
    }

    pub fn value(&self) -> u64 {
        let mut acc = 0u64;
        for &(d, len) in self.runs.iter().rev() {
            for _ in 0..len {
                acc = acc * self.k + d;
            }
        }
        acc
    }

    /// Digits least significant first.
    pub fn digits(&self) -> Vec<u64> {
        self.runs
            .iter()
            .flat_map(|&(d, len)| std::iter::repeat_n(d, len as usize))
            .collect()
    }

    pub fn runs(&self) -> impl ExactSizeIterator<Item = (u64, u32)> + '_ {
        self.runs.iter().copied()
    }

    /// Position of the rightmost nonzero digit, `None` for zero.
    pub fn beta(&self) -> Option<u32> {
        match *self.runs.front()? {
            (0, len) => Some(len),
            _ => Some(0),
        }
    }

    pub fn increment(&mut self) {
        let top = self.k - 1;
        match self.runs.front().copied() {
            None => self.runs.push_back((1, 1)),
            Some((d, len)) if d < top => {
                self.runs.pop_front();
                self.bump_lowest(d, len);
            }
            Some((_, len)) => {
                // A run of k-1 digits carries into the next run.
                self.runs.pop_front();
                match self.runs.pop_front() {
                    None => self.runs.push_front((1, 1)),
                    Some((e, len2)) => self.bump_lowest(e, len2),
                }
                self.runs.push_front((0, len));
            }
        }
    }

    /// Re-inserts the popped run `(d, len)` with its lowest digit incremented.
    fn bump_lowest(&mut self, d: u64, len: u32) {
        if len > 1 {
            self.runs.push_front((d, len - 1));
            self.runs.push_front((d + 1, 1));
            return;
        }
        match self.runs.front_mut() {
            Some((next, next_len)) if *next == d + 1 => *next_len += 1,
            _ => self.runs.push_front((d + 1, 1)),
        }
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}
