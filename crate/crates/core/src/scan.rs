//! Cursor maintenance and bounded checking shared by the fingerprint engines.

use crate::checkpoint::{CheckpointList, NodeId};
use crate::engine::{Answer, PushStats};
use crate::fingerprint::{FingerprintTuple, HashConfig};

/// Steps the cursor back by one, advances it to the newest checkpoint whose
/// candidate `S[v.i..i]` is longer than the answer, then checks at most
/// `width` checkpoints starting there. `current` is `I(i+1)`.
pub(crate) fn scan(
    cfg: &HashConfig,
    list: &CheckpointList,
    cursor: &mut Option<NodeId>,
    current: &FingerprintTuple,
    answer: &mut Answer,
    width: usize,
    stats: &mut PushStats,
) {
    let Some(mut sp) = *cursor else {
        return;
    };
    let i = current.i - 1;
    if let Some(newer) = list.previous(sp) {
        sp = newer;
    }
    while i - list.get(sp).i < answer.len {
        match list.next(sp) {
            Some(older) => sp = older,
            None => break,
        }
        stats.cursor_steps += 1;
    }
    *cursor = Some(sp);

    let mut v = Some(sp);
    for _ in 0..width {
        let Some(id) = v else { break };
        let t = list.get(id);
        let candidate = i - t.i + 1;
        if candidate > answer.len {
            stats.checks += 1;
            if cfg.is_palindrome(t, current) {
                *answer = Answer::new(t.i, candidate);
            }
        }
        v = list.next(id);
    }
}

/// Removes `id`, moving the cursor off it first.
pub(crate) fn delete(list: &mut CheckpointList, cursor: &mut Option<NodeId>, id: NodeId) {
    if *cursor == Some(id) {
        *cursor = list.next(id).or(list.previous(id));
    }
    list.remove(id);
}
