//! Naive reference model of [`Cdll`] for model-based testing.
//!
//! The model keeps the linked nodes as a plain ordered `Vec`, detached nodes
//! in a map, and free slots in a set. It shares no code with the arena
//! implementation; each operation is the obvious sequence edit with the same
//! guards.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cdll::Cdll;

/// A node taken off the cycle by `remove`, with the neighbors it recorded.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Detached {
    pub val: i64,
    pub prev: usize,
    pub next: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListModel {
    capacity: usize,
    /// `(slot, value)` in head-first order.
    pub linked: Vec<(usize, i64)>,
    pub detached: BTreeMap<usize, Detached>,
    pub free: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("list is not consistent and has no abstract value")]
pub struct NotAbstractable;

impl ListModel {
    pub fn new(capacity: usize) -> Self {
        ListModel {
            capacity,
            linked: Vec::new(),
            detached: BTreeMap::new(),
            free: (0..capacity).collect(),
        }
    }

    /// Abstract value of a consistent list.
    pub fn abstract_from<const N: usize>(list: &Cdll<N>) -> Result<Self, NotAbstractable> {
        if !list.is_consistent() {
            return Err(NotAbstractable);
        }
        let cycle = list.cycle().ok_or(NotAbstractable)?;
        let linked: Vec<(usize, i64)> = cycle.iter().map(|&i| (i, list.nodes[i].val)).collect();
        let on_cycle: BTreeSet<usize> = cycle.into_iter().collect();
        let mut detached = BTreeMap::new();
        let mut free = BTreeSet::new();
        for (i, node) in list.nodes.iter().enumerate() {
            if !node.alloc.is_allocated() {
                free.insert(i);
            } else if !on_cycle.contains(&i) {
                detached.insert(
                    i,
                    Detached {
                        val: node.val,
                        prev: node.prev,
                        next: node.next,
                    },
                );
            }
        }
        Ok(ListModel {
            capacity: N,
            linked,
            detached,
            free,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.linked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.linked.is_empty()
    }

    /// Head slot, or 0 for the empty list.
    pub fn head(&self) -> usize {
        self.linked.first().map_or(0, |&(i, _)| i)
    }

    pub fn values(&self) -> Vec<i64> {
        self.linked.iter().map(|&(_, v)| v).collect()
    }

    /// Checks that linked, detached and free slots partition the slot range
    /// and that no slot is linked twice.
    pub fn is_valid(&self) -> bool {
        let mut seen = BTreeSet::new();
        let all = self
            .linked
            .iter()
            .map(|&(i, _)| i)
            .chain(self.detached.keys().copied())
            .chain(self.free.iter().copied());
        for i in all {
            if i >= self.capacity || !seen.insert(i) {
                return false;
            }
        }
        seen.len() == self.capacity
    }

    fn position(&self, slot: usize) -> Option<usize> {
        self.linked.iter().position(|&(i, _)| i == slot)
    }

    pub fn cns(mut self, v: i64) -> Self {
        if let Some(slot) = self.free.pop_first() {
            self.linked.insert(0, (slot, v));
        }
        self
    }

    pub fn snc(mut self, v: i64) -> Self {
        if let Some(slot) = self.free.pop_first() {
            self.linked.push((slot, v));
        }
        self
    }

    pub fn rst(mut self) -> Self {
        if !self.linked.is_empty() {
            let (slot, _) = self.linked.remove(0);
            self.free.insert(slot);
        }
        self
    }

    pub fn tsr(mut self) -> Self {
        if let Some((slot, _)) = self.linked.pop() {
            self.free.insert(slot);
        }
        self
    }

    pub fn nth(&self, k: usize) -> i64 {
        self.linked.get(k).map_or(0, |&(_, v)| v)
    }

    fn remove_guarded(&self, n: usize) -> bool {
        n >= self.capacity || n == self.head() || self.linked.len() < 3
    }

    fn restore_guarded(&self, n: usize) -> bool {
        n >= self.capacity
            || n == self.head()
            || self.linked.len() < 2
            || self.linked.len() == self.capacity
    }

    /// Whether `remove(n)` has defined behavior: a guard fires, or `n` is
    /// linked.
    pub fn remove_is_defined(&self, n: usize) -> bool {
        self.remove_guarded(n) || self.position(n).is_some()
    }

    /// Whether `restore(n)` has defined behavior: a guard fires, or `n` is
    /// detached and its recorded neighbors are adjacent on the cycle.
    pub fn restore_is_defined(&self, n: usize) -> bool {
        self.restore_guarded(n) || self.restore_position(n).is_some()
    }

    /// Index in `linked` where a detached `n` would be re-inserted.
    fn restore_position(&self, n: usize) -> Option<usize> {
        let d = self.detached.get(&n)?;
        let at = self.position(d.prev)?;
        let after = (at + 1) % self.linked.len();
        (self.linked[after].0 == d.next).then_some(at + 1)
    }

    /// Moves linked node `n` to the detached map, recording its neighbors.
    /// No-op when a guard fires or `n` is not linked.
    pub fn remove(mut self, n: usize) -> Self {
        if self.remove_guarded(n) {
            return self;
        }
        let Some(at) = self.position(n) else {
            return self;
        };
        let len = self.linked.len();
        let prev = self.linked[(at + len - 1) % len].0;
        let next = self.linked[(at + 1) % len].0;
        let (_, val) = self.linked.remove(at);
        self.detached.insert(n, Detached { val, prev, next });
        self
    }

    /// Re-inserts detached node `n` between its recorded neighbors when they
    /// are adjacent. No-op otherwise.
    pub fn restore(mut self, n: usize) -> Self {
        if self.restore_guarded(n) {
            return self;
        }
        let Some(at) = self.restore_position(n) else {
            return self;
        };
        let d = self.detached.remove(&n).expect("position implies detached");
        self.linked.insert(at, (n, d.val));
        self
    }
}
