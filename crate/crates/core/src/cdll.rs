//! Array-backed circular doubly-linked list with the dancing-links
//! `remove`/`restore` pair.
//!
//! Links are slot indices into a fixed array of `N` nodes, so the cycle needs
//! no shared ownership. Every operation takes the list by value and returns
//! the updated list; no operation can fail, and every guard failure returns
//! the input untouched.
//!
//! Two kinds of "deletion" coexist:
//!
//! * [`Cdll::remove`] detaches a node from the cycle but leaves the node's own
//!   fields alone, so [`Cdll::restore`] can splice it back in O(1).
//! * [`Cdll::rst`] and [`Cdll::tsr`] really delete: the slot is freed and its
//!   fields are zeroed.

use std::fmt;

/// Default number of node slots.
pub const CAPACITY: usize = 8191;

/// Largest valid slot index for the default capacity.
pub const MAX_NODE: usize = CAPACITY - 1;

/// Allocation state of a slot.
///
/// Only the non-zero values 2 and 3 are legal, so that a well-formed node
/// never has every field equal to zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AllocTag(pub u8);

impl AllocTag {
    pub const FREE: AllocTag = AllocTag(2);
    pub const ALLOCATED: AllocTag = AllocTag(3);

    pub fn is_valid(self) -> bool {
        self == Self::FREE || self == Self::ALLOCATED
    }

    pub fn is_allocated(self) -> bool {
        self == Self::ALLOCATED
    }
}

/// One arena slot.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct CdllNode {
    pub alloc: AllocTag,
    pub val: i64,
    pub prev: usize,
    pub next: usize,
}

impl CdllNode {
    /// A free slot in canonical (zeroed) form.
    pub const FREE: CdllNode = CdllNode {
        alloc: AllocTag::FREE,
        val: 0,
        prev: 0,
        next: 0,
    };
}

/// Circular doubly-linked list over `N` slots.
///
/// The fields are public so that arbitrary (including ill-formed) states can
/// be constructed and checked with [`Cdll::is_well_formed`]. Operations index
/// the node array with the stored `prev`/`next` values, so they panic on a
/// state whose links exceed `N - 1`; every well-formed state is safe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cdll<const N: usize = CAPACITY> {
    pub head: usize,
    pub count: usize,
    pub nodes: Box<[CdllNode; N]>,
}

impl<const N: usize> Default for Cdll<N> {
    fn default() -> Self {
        Self::new()
    }
}

impl<const N: usize> Cdll<N> {
    /// Number of slots.
    pub const CAPACITY: usize = N;
    /// Largest valid slot index.
    pub const MAX_NODE: usize = N - 1;

    /// The empty list: head 0, count 0, every slot free and zeroed.
    pub fn new() -> Self {
        let _ = Self::MAX_NODE; // rejects N = 0 at compile time
        let nodes: Box<[CdllNode; N]> = vec![CdllNode::FREE; N]
            .into_boxed_slice()
            .try_into()
            .unwrap_or_else(|_| unreachable!("vector has exactly N elements"));
        Cdll {
            head: 0,
            count: 0,
            nodes,
        }
    }

    /// Detaches node `n` from the cycle, leaving its own fields intact.
    ///
    /// No-op when `n` is out of range, is the head, or fewer than three nodes
    /// are linked.
    pub fn remove(mut self, n: usize) -> Self {
        if n > Self::MAX_NODE {
            return self;
        }
        if n == self.head {
            // Can't remove head
            return self;
        }
        if self.count < 3 {
            return self;
        }
        let next = self.nodes[n].next;
        let prev = self.nodes[n].prev;
        self.nodes[prev].next = next;
        self.nodes[next].prev = prev;
        self.count -= 1;
        self
    }

    /// Splices node `n` back between its retained `prev` and `next`.
    ///
    /// No-op when `n` is out of range, is the head, fewer than two nodes are
    /// linked, or the list is full. Only meaningful in LIFO order relative to
    /// [`Cdll::remove`]; see [`Cdll::is_restorable`].
    pub fn restore(mut self, n: usize) -> Self {
        if n > Self::MAX_NODE {
            return self;
        }
        if n == self.head {
            // Can't restore head
            return self;
        }
        if self.count < 2 || self.count == N {
            return self;
        }
        let prev = self.nodes[n].prev;
        let next = self.nodes[n].next;
        self.nodes[prev].next = n;
        self.nodes[next].prev = n;
        self.count += 1;
        self
    }

    /// Prepends `v`; the new node becomes the head.
    pub fn cns(self, v: i64) -> Self {
        self.insert(v, true)
    }

    /// Appends `v`; the head is unchanged unless the list was empty.
    pub fn snc(self, v: i64) -> Self {
        self.insert(v, false)
    }

    /// Deletes the head node.
    pub fn rst(self) -> Self {
        if self.count == 0 {
            return self;
        }
        let head = self.head;
        self.delete(head)
    }

    /// Deletes the last node (the head's predecessor).
    pub fn tsr(self) -> Self {
        if self.count == 0 {
            return self;
        }
        let last = self.nodes[self.head].prev;
        self.delete(last)
    }

    /// Value of the `k`-th linked node from the head, or 0 when `k` is out of
    /// range.
    pub fn nth(&self, k: usize) -> i64 {
        if k >= self.count {
            return 0;
        }
        let mut at = self.head;
        for _ in 0..k {
            at = self.nodes[at].next;
        }
        self.nodes[at].val
    }

    fn lowest_free_slot(&self) -> Option<usize> {
        self.nodes.iter().position(|node| !node.alloc.is_allocated())
    }

    fn insert(mut self, v: i64, at_front: bool) -> Self {
        let Some(slot) = self.lowest_free_slot() else {
            return self;
        };
        if self.count == 0 {
            self.nodes[slot] = CdllNode {
                alloc: AllocTag::ALLOCATED,
                val: v,
                prev: slot,
                next: slot,
            };
            self.head = slot;
            self.count = 1;
            return self;
        }
        let head = self.head;
        let last = self.nodes[head].prev;
        self.nodes[slot] = CdllNode {
            alloc: AllocTag::ALLOCATED,
            val: v,
            prev: last,
            next: head,
        };
        self.nodes[last].next = slot;
        self.nodes[head].prev = slot;
        if at_front {
            self.head = slot;
        }
        self.count += 1;
        self
    }

    /// Unlinks and frees a linked node; `count` must be at least 1.
    fn delete(mut self, n: usize) -> Self {
        if self.count == 1 {
            self.nodes[n] = CdllNode::FREE;
            self.head = 0;
            self.count = 0;
            return self;
        }
        let CdllNode { prev, next, .. } = self.nodes[n];
        self.nodes[prev].next = next;
        self.nodes[next].prev = prev;
        if n == self.head {
            self.head = next;
        }
        self.nodes[n] = CdllNode::FREE;
        self.count -= 1;
        self
    }

    /// Field-bound well-formedness: head and every link within
    /// `[0, MAX_NODE]`, count within `[0, N]`, every alloc tag 2 or 3.
    ///
    /// The array length conjunct holds by construction of the type.
    pub fn is_well_formed(&self) -> bool {
        self.head <= Self::MAX_NODE
            && self.count <= N
            && self.nodes.len() == N
            && self.nodes.iter().all(|node| {
                node.alloc.is_valid() && node.prev <= Self::MAX_NODE && node.next <= Self::MAX_NODE
            })
    }

    /// Local hypotheses on node `n`: allocated, neighbors allocated, not
    /// self-linked unless it is the only node, and stitched to both neighbors.
    pub fn is_good_node(&self, n: usize) -> bool {
        if n > Self::MAX_NODE {
            return false;
        }
        let node = &self.nodes[n];
        if !node.alloc.is_allocated() || node.prev > Self::MAX_NODE || node.next > Self::MAX_NODE {
            return false;
        }
        let prev = &self.nodes[node.prev];
        let next = &self.nodes[node.next];
        prev.alloc.is_allocated()
            && next.alloc.is_allocated()
            && (n != node.prev || self.count == 1)
            && prev.next == n
            && next.prev == n
    }

    /// Global consistency: well-formed, and the `next` walk from the head
    /// visits exactly `count` distinct allocated slots before returning, with
    /// `prev` inverting `next` along the way.
    ///
    /// Allocated slots that are off the cycle (detached by
    /// [`Cdll::remove`]) are permitted.
    pub fn is_consistent(&self) -> bool {
        if !self.is_well_formed() {
            return false;
        }
        self.cycle().is_some()
    }

    /// Slots on the cycle in head-traversal order, or `None` when the walk is
    /// not a proper cycle of length `count`. Empty when `count` is 0.
    pub fn cycle(&self) -> Option<Vec<usize>> {
        if self.count == 0 {
            return Some(Vec::new());
        }
        if self.head > Self::MAX_NODE {
            return None;
        }
        let mut seen = vec![false; N];
        let mut order = Vec::with_capacity(self.count);
        let mut at = self.head;
        for _ in 0..self.count {
            if at > Self::MAX_NODE || seen[at] {
                return None;
            }
            let node = &self.nodes[at];
            if !node.alloc.is_allocated() || node.next > Self::MAX_NODE {
                return None;
            }
            if self.nodes[node.next].prev != at {
                return None;
            }
            seen[at] = true;
            order.push(at);
            at = node.next;
        }
        (at == self.head).then_some(order)
    }

    /// Whether [`Cdll::restore`] on `n` would splice a detached node back
    /// into a consistent list: `n` is allocated and its retained neighbors
    /// are currently linked to each other.
    ///
    /// Assumes `self.is_consistent()`.
    pub fn is_restorable(&self, n: usize) -> bool {
        if n > Self::MAX_NODE || n == self.head || self.count < 2 || self.count == N {
            return false;
        }
        let node = &self.nodes[n];
        if !node.alloc.is_allocated() || node.prev > Self::MAX_NODE || node.next > Self::MAX_NODE {
            return false;
        }
        let (prev, next) = (node.prev, node.next);
        prev != n
            && next != n
            && self.nodes[prev].alloc.is_allocated()
            && self.nodes[next].alloc.is_allocated()
            && self.nodes[prev].next == next
            && self.nodes[next].prev == prev
    }

    /// Number of allocated slots, linked or detached.
    pub fn allocated(&self) -> usize {
        self.nodes.iter().filter(|node| node.alloc.is_allocated()).count()
    }

    /// Linked values in head-traversal order. Follows `next` for `count`
    /// steps without checking consistency.
    pub fn values(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.count);
        let mut at = self.head;
        for _ in 0..self.count {
            out.push(self.nodes[at].val);
            at = self.nodes[at].next;
        }
        out
    }
}

impl<const N: usize> fmt::Debug for Cdll<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // only non-canonical slots; a full dump is thousands of lines
        let slots: Vec<_> = self
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, node)| **node != CdllNode::FREE)
            .collect();
        f.debug_struct("Cdll")
            .field("capacity", &N)
            .field("head", &self.head)
            .field("count", &self.count)
            .field("slots", &slots)
            .finish()
    }
}
