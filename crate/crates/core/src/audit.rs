//! Structural checks on checkpoint lists.
//!
//! Each function takes the positions currently held by an engine, newest
//! first, and the number of symbols pushed, and reports the first violated
//! occupancy rule.

use crate::mult_large::KaryParams;
use crate::mult_small::TtlParams;

/// Splits `positions` (newest first) into look-back intervals. Interval `k`
/// covers doubled distances `[far2[k-1], far2[k])` from `i`, starting at 0.
fn bucket(positions: &[u64], i: u64, far2: &[u64]) -> Result<Vec<usize>, String> {
    let mut counts = vec![0; far2.len()];
    let mut k = 0;
    let mut last = None;
    for &x in positions {
        if x == 0 || x > i || last.is_some_and(|l| l <= x) {
            return Err(format!(
                "i = {i}: positions not strictly decreasing inside (0, i]"
            ));
        }
        last = Some(x);
        let back2 = 2 * (i - x);
        while k < far2.len() && back2 >= far2[k] {
            k += 1;
        }
        if k == far2.len() {
            return Err(format!("i = {i}: position {x} beyond the last interval"));
        }
        counts[k] += 1;
    }
    Ok(counts)
}

/// Binary schedule: the newest `2^(q+2)` positions are all present, each
/// doubling interval `(i - 2^e, i - 2^(e-1)]` that lies inside the stream
/// holds exactly `2^(q+1)`, and the one reaching past position 1 at most
/// that many.
pub fn binary_occupancy(positions: &[u64], i: u64, params: &TtlParams) -> Result<(), String> {
    let first = params.first_interval();
    let middle = first / 2;
    let mut far = vec![first];
    while *far.last().unwrap() < i {
        far.push(2 * far.last().unwrap());
    }
    let far2: Vec<u64> = far.iter().map(|f| 2 * f).collect();
    let counts = bucket(positions, i, &far2)?;
    if counts[0] as u64 != first.min(i) {
        return Err(format!(
            "i = {i}: first interval holds {}, expected {}",
            counts[0],
            first.min(i)
        ));
    }
    for (k, &got) in counts.iter().enumerate().skip(1) {
        let got = got as u64;
        let full = far[k] <= i;
        if (full && got != middle) || got > middle {
            return Err(format!(
                "i = {i}: interval {k} holds {got}, expected {middle}"
            ));
        }
    }
    Ok(())
}

/// Upper bound on the binary-schedule list size after `i` pushes.
pub fn binary_size_bound(i: u64, params: &TtlParams) -> u64 {
    let first = params.first_interval();
    let half = first / 2;
    let mut doublings = 0;
    while first << doublings < i {
        doublings += 1;
    }
    first + doublings * half + half
}

/// Base-`k` schedule: interval 0 is `(i - 4, i]`, interval `j >= 1` is
/// `(i - 9/2 k^j, i - 9/2 k^(j-1)]` (with `i - 4` as the right end for
/// `j = 1`). Every interval holds at most 5 positions, and every interval
/// inside the stream at least 3.
pub fn kary_occupancy(positions: &[u64], i: u64, params: &KaryParams) -> Result<(), String> {
    let mut far2 = vec![8];
    let mut j = 1;
    while *far2.last().unwrap() <= 2 * i {
        far2.push(params.boundary(j).saturating_mul(2));
        j += 1;
    }
    let counts = bucket(positions, i, &far2)?;
    for (j, &got) in counts.iter().enumerate() {
        let full = far2[j] <= 2 * i;
        if got > 5 || (full && got < 3) {
            return Err(format!("i = {i}: interval {j} holds {got}"));
        }
    }
    Ok(())
}

/// Upper bound on the base-`k` list size after `i` pushes.
pub fn kary_size_bound(i: u64, params: &KaryParams) -> u64 {
    let mut digits = 0;
    let mut reach = 1u64;
    while reach < i {
        reach = reach.saturating_mul(params.k());
        digits += 1;
    }
    5 * digits + 5
}

/// Additive schedule: exactly the multiples of `spacing` up to `i`, newest
/// first.
pub fn additive_layout(positions: &[u64], i: u64, spacing: u64) -> Result<(), String> {
    let expected = (1..=i / spacing).rev().map(|m| m * spacing);
    if positions.iter().copied().ne(expected) {
        return Err(format!(
            "i = {i}: checkpoints are not the multiples of {spacing}"
        ));
    }
    Ok(())
}
