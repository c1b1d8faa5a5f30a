//! Offline ground truth: linear-time Manacher and a quadratic center scan.
//!
//! Both report the leftmost longest palindrome so differential tests can
//! compare positions as well as lengths.

use crate::engine::Answer;
use crate::fingerprint::{ComplementMap, Symbol};

/// Longest palindrome length and its leftmost 1-based start.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleResult {
    pub pos: u64,
    pub len: u64,
}

impl OracleResult {
    fn offer(&mut self, start0: usize, len: usize) {
        let (pos, len) = (start0 as u64 + 1, len as u64);
        if len > self.len || (len == self.len && pos < self.pos) {
            *self = OracleResult { pos, len };
        }
    }

    pub fn answer(&self) -> Answer {
        Answer::new(self.pos, self.len)
    }
}

/// Textbook Manacher with separate odd and even radius arrays.
pub fn oracle_lps(s: &[Symbol]) -> OracleResult {
    let n = s.len();
    let mut best = OracleResult::default();
    if n == 0 {
        return best;
    }
    // odd[i]: palindromes centered at i, so the longest has length 2*odd[i]-1.
    let mut odd = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    for i in 0..n {
        let mut k = if i >= r {
            1
        } else {
            odd[l + r - i - 1].min(r - i)
        };
        while i + k < n && i >= k && s[i - k] == s[i + k] {
            k += 1;
        }
        odd[i] = k;
        if i + k > r {
            l = i + 1 - k;
            r = i + k;
        }
    }
    // even[i]: even palindromes whose right half starts at i.
    let mut even = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    for i in 0..n {
        let mut k = if i >= r {
            0
        } else {
            even[l + r - i].min(r - i)
        };
        while i + k < n && i > k && s[i - k - 1] == s[i + k] {
            k += 1;
        }
        even[i] = k;
        if i + k > r {
            l = i - k;
            r = i + k;
        }
    }
    for i in 0..n {
        best.offer(i + 1 - odd[i], 2 * odd[i] - 1);
        if even[i] > 0 {
            best.offer(i - even[i], 2 * even[i]);
        }
    }
    best
}

/// Expands around all `2n - 1` centers.
pub fn oracle_lps_naive(s: &[Symbol]) -> OracleResult {
    oracle_lps_complement(s, &ComplementMap::identity())
}

/// Center expansion where `u` qualifies iff it equals the complement of its
/// reversal. With the identity map this is the ordinary palindrome oracle.
pub fn oracle_lps_complement(s: &[Symbol], map: &ComplementMap) -> OracleResult {
    let n = s.len();
    let mut best = OracleResult::default();
    let pairs = |a: Symbol, b: Symbol| a == map.apply(b);
    for center in 0..2 * n {
        let (mut lo, mut hi) = (center / 2, center.div_ceil(2));
        if hi >= n || !pairs(s[lo], s[hi]) {
            continue;
        }
        loop {
            best.offer(lo, hi - lo + 1);
            if lo == 0 || hi + 1 == n || !pairs(s[lo - 1], s[hi + 1]) {
                break;
            }
            lo -= 1;
            hi += 1;
        }
    }
    best
}

/// Whether `s[pos..pos+len)` (1-based `pos`) is a palindrome.
pub fn is_palindrome_at(s: &[Symbol], answer: Answer) -> bool {
    if answer.len == 0 {
        return true;
    }
    let range = answer.range();
    if range.end > s.len() {
        return false;
    }
    let w = &s[range];
    w.iter().eq(w.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bytes(s: &str) -> Vec<Symbol> {
        s.bytes().map(Symbol::from).collect()
    }

    #[test]
    fn fixed_cases() {
        let cases = [
            ("abacaba", (1, 7)),
            ("", (0, 0)),
            ("aa", (1, 2)),
            ("ab", (1, 1)),
            ("xabbay", (2, 4)),
            ("abcbaxyzzyx", (6, 6)),
            ("mississippi", (2, 7)),
        ];
        for (s, (pos, len)) in cases {
            let want = OracleResult { pos, len };
            assert_eq!(oracle_lps(&bytes(s)), want, "{s}");
            assert_eq!(oracle_lps_naive(&bytes(s)), want, "{s}");
        }
    }

    #[test]
    fn exhaustive_binary_agreement() {
        for len in 0..=12u32 {
            for mask in 0..1u32 << len {
                let s: Vec<Symbol> = (0..len).map(|b| u64::from(mask >> b & 1)).collect();
                let fast = oracle_lps(&s);
                assert_eq!(fast, oracle_lps_naive(&s), "{s:?}");
                assert!(is_palindrome_at(&s, fast.answer()));
            }
        }
    }

    #[test]
    fn reverse_complement_cases() {
        let dna = ComplementMap::dna();
        let run = |s: &str| oracle_lps_complement(&bytes(s), &dna);
        assert_eq!(run("GAATTC"), OracleResult { pos: 1, len: 6 });
        assert_eq!(run("TTACGTAA"), OracleResult { pos: 1, len: 8 });
        assert_eq!(run("AAAA"), OracleResult { pos: 0, len: 0 });
        assert_eq!(run("CCATGG").len, 6);
    }

    #[test]
    fn reverse_complement_brute_force() {
        let dna = ComplementMap::dna();
        let letters = bytes("ACGT");
        for len in 0..=7u32 {
            for code in 0..4u32.pow(len) {
                let s: Vec<Symbol> = (0..len)
                    .map(|k| letters[(code >> (2 * k) & 3) as usize])
                    .collect();
                let mut want = OracleResult::default();
                for i in 0..s.len() {
                    for j in i..s.len() {
                        let w = &s[i..=j];
                        if w.iter()
                            .zip(w.iter().rev())
                            .all(|(&a, &b)| a == dna.apply(b))
                        {
                            want.offer(i, j - i + 1);
                        }
                    }
                }
                assert_eq!(oracle_lps_complement(&s, &dna), want, "{s:?}");
            }
        }
    }
}
