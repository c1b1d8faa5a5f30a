//! Doubly linked checkpoint list with stable handles.
//!
//! Tuples are kept in decreasing order of position: the front is the newest
//! checkpoint, `next` moves towards older ones. Nodes live in an arena and
//! freed slots are reused, so removal through a handle is O(1).

use crate::fingerprint::FingerprintTuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeId(u32);

#[derive(Debug, Clone)]
struct Node {
    tuple: FingerprintTuple,
    newer: Option<NodeId>,
    older: Option<NodeId>,
}

#[derive(Debug, Clone, Default)]
pub struct CheckpointList {
    nodes: Vec<Node>,
    free: Vec<NodeId>,
    head: Option<NodeId>,
    tail: Option<NodeId>,
    len: usize,
}

impl CheckpointList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Newest checkpoint.
    pub fn first(&self) -> Option<NodeId> {
        self.head
    }

    /// Oldest checkpoint.
    pub fn last(&self) -> Option<NodeId> {
        self.tail
    }

    /// The next older checkpoint.
    pub fn next(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).older
    }

    /// The next newer checkpoint.
    pub fn previous(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).newer
    }

    pub fn get(&self, id: NodeId) -> &FingerprintTuple {
        &self.node(id).tuple
    }

    pub fn push_front(&mut self, tuple: FingerprintTuple) -> NodeId {
        debug_assert!(self.head.is_none_or(|h| self.get(h).i < tuple.i));
        let node = Node {
            tuple,
            newer: None,
            older: self.head,
        };
        let id = match self.free.pop() {
            Some(id) => {
                self.nodes[id.0 as usize] = node;
                id
            }
            None => {
                let raw = u32::try_from(self.nodes.len()).expect("checkpoint arena exhausted");
                self.nodes.push(node);
                NodeId(raw)
            }
        };
        match self.head {
            Some(h) => self.node_mut(h).newer = Some(id),
            None => self.tail = Some(id),
        }
        self.head = Some(id);
        self.len += 1;
        id
    }

    /// Unlinks `id`. The handle must not be used afterwards.
    pub fn remove(&mut self, id: NodeId) -> FingerprintTuple {
        let Node {
            tuple,
            newer,
            older,
        } = self.node(id).clone();
        match newer {
            Some(n) => self.node_mut(n).older = older,
            None => self.head = older,
        }
        match older {
            Some(o) => self.node_mut(o).newer = newer,
            None => self.tail = newer,
        }
        self.free.push(id);
        self.len -= 1;
        tuple
    }

    /// Tuples from newest to oldest.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            list: self,
            cur: self.head,
        }
    }

    fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0 as usize]
    }

    fn node_mut(&mut self, id: NodeId) -> &mut Node {
        &mut self.nodes[id.0 as usize]
    }
}

pub struct Iter<'a> {
    list: &'a CheckpointList,
    cur: Option<NodeId>,
}

impl<'a> Iterator for Iter<'a> {
    type Item = &'a FingerprintTuple;

    fn next(&mut self) -> Option<Self::Item> {
        let id = self.cur?;
        self.cur = self.list.next(id);
        Some(self.list.get(id))
    }
}
