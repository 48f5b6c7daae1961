//! Greedy pivot search: from a start tree, repeatedly apply the smallest
//! move (in the [`EdgeMove`] order) that yields a spanning tree not seen
//! before, halting when no move does.
//!
//! Started from the path this reproduces the recursive listing exactly, and
//! started from the listing's last tree it reproduces the reverse — the
//! cross-checks in the test suite lean on that. Other start trees come with
//! no guarantee: some happen to cover every tree, others dead-end partway
//! (the star and the reversed path both do, once n is large enough).
//! The visited set keeps one membership bitset per tree
//! seen, so memory grows with the Fibonacci tree count: fine for small
//! fans, hopeless much past n = 14.

use std::collections::HashSet;

use crate::graph::{Edge, EdgeMove, VertexLabel};
use crate::tree::{EdgeBitset, SpanningTree};

/// A greedy run in progress: the current tree plus everything visited.
pub struct GreedyState {
    current: SpanningTree,
    visited: HashSet<EdgeBitset>,
    emitted: u64,
}

impl GreedyState {
    /// Starts a run; the start tree counts as visited and emitted.
    pub fn new(start: SpanningTree) -> GreedyState {
        let mut visited = HashSet::new();
        visited.insert(start.bitset().clone());
        GreedyState {
            current: start,
            visited,
            emitted: 1,
        }
    }

    pub fn current(&self) -> &SpanningTree {
        &self.current
    }

    /// Trees produced so far, the start included.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// The smallest valid move from the current tree to an unvisited
    /// spanning tree, or None when the run is stuck (every candidate either
    /// breaks the tree or revisits).
    ///
    /// Candidates are scanned in move order: pivots from `v2` up with the
    /// hub last, then removed endpoints ascending among the pivot's tree
    /// edges, then added endpoints ascending among its non-tree fan edges —
    /// so the first hit is the minimum.
    pub fn next_greedy_move(&self) -> Option<EdgeMove> {
        let n = self.current.n();
        let mut pivots: Vec<VertexLabel> = (2..=n).map(VertexLabel::Finite).collect();
        pivots.push(VertexLabel::Hub);
        for pivot in pivots {
            for removed in incident(n, pivot) {
                if !self.current.has_edge(pivot, removed) {
                    continue;
                }
                for added in incident(n, pivot) {
                    if self.current.has_edge(pivot, added) {
                        continue;
                    }
                    let mv = EdgeMove::new(n, pivot, removed, added)
                        .expect("incident() only yields fan edges distinct from the removed one");
                    if !self.current.is_valid_tree_move(mv).expect("membership checked above") {
                        continue;
                    }
                    // Membership key of the tree this move would produce.
                    let mut key = self.current.bitset().clone();
                    key.clear(Edge::new(n, pivot, removed).expect("fan edge").index(n));
                    key.set(Edge::new(n, pivot, added).expect("fan edge").index(n));
                    if !self.visited.contains(&key) {
                        return Some(mv);
                    }
                }
            }
        }
        None
    }

    /// Applies the next greedy move, records the new tree, and returns the
    /// move; None when the run has halted.
    pub fn advance(&mut self) -> Option<EdgeMove> {
        let mv = self.next_greedy_move()?;
        self.current
            .apply_move(mv)
            .expect("the chosen move was validated");
        self.visited.insert(self.current.bitset().clone());
        self.emitted += 1;
        Some(mv)
    }
}

/// The other endpoints of `pivot`'s fan edges, ascending: for a path vertex
/// its path neighbours then the hub, for the hub every path vertex.
fn incident(n: u32, pivot: VertexLabel) -> Vec<VertexLabel> {
    match pivot {
        VertexLabel::Finite(k) => {
            let mut out = Vec::with_capacity(3);
            if k > 2 {
                out.push(VertexLabel::Finite(k - 1));
            }
            if k < n {
                out.push(VertexLabel::Finite(k + 1));
            }
            out.push(VertexLabel::Hub);
            out
        }
        VertexLabel::Hub => (2..=n).map(VertexLabel::Finite).collect(),
    }
}

/// Runs the greedy search from `start` until it halts (or until `limit`
/// trees have been produced) and returns the trees in order, `start` first.
pub fn greedy_listing(start: &SpanningTree, limit: Option<u64>) -> Vec<SpanningTree> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return out;
    }
    let mut state = GreedyState::new(start.clone());
    out.push(start.clone());
    while limit.is_none_or(|l| state.emitted() < l) {
        if state.advance().is_none() {
            break;
        }
        out.push(state.current().clone());
    }
    out
}
