use std::collections::VecDeque;

use crate::checkpoint::NodeId;

/// One FIFO of checkpoint handles per digit class.
///
/// Checkpoints of the same class share a time-to-live, so they expire in
/// insertion order and the oldest one is always at the front.
#[derive(Debug, Clone, Default)]
pub struct TtlQueues {
    queues: Vec<VecDeque<NodeId>>,
    total: usize,
}

impl TtlQueues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, class: u32, id: NodeId) {
        let class = class as usize;
        if self.queues.len() <= class {
            self.queues.resize_with(class + 1, VecDeque::new);
        }
        self.queues[class].push_back(id);
        self.total += 1;
    }

    /// Oldest handle in `class`.
    pub fn front(&self, class: u32) -> Option<NodeId> {
        self.queues.get(class as usize)?.front().copied()
    }

    pub fn pop(&mut self, class: u32) -> Option<NodeId> {
        let item = self.queues.get_mut(class as usize)?.pop_front();
        if item.is_some() {
            self.total -= 1;
        }
        item
    }

    /// Handles across all classes.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn classes(&self) -> usize {
        self.queues.len()
    }
}
