//! Spanning trees of the fan, edge exchanges on them, and the text format.
//!
//! A tree keeps two coherent views of its edge set: per-vertex adjacency
//! lists (each edge stored under its lower endpoint) and a `2n - 3` bit
//! membership set indexed by [`Edge::index`]. Moves update both in O(1);
//! the bitset doubles as a compact identity for visited-set and equality
//! checks.

use std::collections::VecDeque;
use std::fmt;

use arrayvec::ArrayVec;

use crate::error::Error;
use crate::graph::{fan_edge_count, Edge, EdgeMove, VertexLabel};

/// Fixed-width bit set over the canonical edge indices of one fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeBitset {
    nbits: u32,
    words: Vec<u64>,
}

impl EdgeBitset {
    fn zeroed(nbits: u32) -> EdgeBitset {
        EdgeBitset {
            nbits,
            words: vec![0; nbits.div_ceil(64) as usize],
        }
    }

    pub fn contains(&self, idx: u32) -> bool {
        debug_assert!(idx < self.nbits);
        self.words[(idx / 64) as usize] & (1 << (idx % 64)) != 0
    }

    pub(crate) fn set(&mut self, idx: u32) {
        debug_assert!(idx < self.nbits);
        self.words[(idx / 64) as usize] |= 1 << (idx % 64);
    }

    pub(crate) fn clear(&mut self, idx: u32) {
        debug_assert!(idx < self.nbits);
        self.words[(idx / 64) as usize] &= !(1 << (idx % 64));
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    Some(wi as u32 * 64 + b)
                }
            })
        })
    }

    /// Indices set in exactly one of the two sets, ascending, each tagged
    /// with whether it came from `self`.
    pub fn diff(&self, other: &EdgeBitset) -> Vec<(u32, bool)> {
        debug_assert_eq!(self.nbits, other.nbits);
        let mut out = Vec::new();
        for (wi, (&a, &b)) in self.words.iter().zip(&other.words).enumerate() {
            let mut x = a ^ b;
            while x != 0 {
                let bit = x.trailing_zeros();
                let idx = wi as u32 * 64 + bit;
                out.push((idx, a & (1 << bit) != 0));
                x &= x - 1;
            }
        }
        out
    }
}

/// A spanning tree of the fan on `n` vertices: exactly `n - 1` fan edges
/// touching every vertex, with no cycle.
///
/// Equality and hashing look only at `n` and the edge membership bits, so
/// two trees compare equal exactly when they have the same edge set.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    n: u32,
    /// `adj[k - 2]` holds the higher-ordered neighbours of path vertex `k`,
    /// i.e. the edges stored under `k`: at most `k + 1` and the hub. The
    /// hub itself keeps no list.
    adj: Vec<ArrayVec<VertexLabel, 3>>,
    membership: EdgeBitset,
}

impl PartialEq for SpanningTree {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.membership == other.membership
    }
}

impl Eq for SpanningTree {}

impl std::hash::Hash for SpanningTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.membership.hash(state);
    }
}

impl SpanningTree {
    /// Builds a tree from an explicit edge set, validating everything: each
    /// edge must belong to the fan on `n` vertices, appear once, the count
    /// must be `n - 1`, and the edges must connect all `n` vertices.
    pub fn from_edges<I>(n: u32, edges: I) -> Result<SpanningTree, Error>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n < 2 {
            return Err(Error::NTooSmall(n));
        }
        let mut tree = SpanningTree {
            n,
            adj: vec![ArrayVec::new(); (n - 1) as usize],
            membership: EdgeBitset::zeroed(fan_edge_count(n)),
        };
        let mut count = 0usize;
        for e in edges {
            // Revalidate against *this* fan: the edge may have been built
            // for a different order.
            let e = Edge::new(n, e.lo(), e.hi())?;
            let idx = e.index(n);
            if tree.membership.contains(idx) {
                return Err(Error::DuplicateEdge(e));
            }
            tree.membership.set(idx);
            tree.adj[Self::slot(e.lo())].push(e.hi());
            count += 1;
        }
        let expected = (n - 1) as usize;
        if count != expected {
            return Err(Error::WrongEdgeCount { expected, got: count });
        }
        if !tree.is_connected() {
            return Err(Error::NotASpanningTree);
        }
        Ok(tree)
    }

    /// The path `v2 - v3 - ... - vn` rooted to the hub through `v2`: the
    /// first tree of the generated listing.
    pub fn path(n: u32) -> Result<SpanningTree, Error> {
        if n < 2 {
            return Err(Error::NTooSmall(n));
        }
        let mut edges = vec![Edge::new(n, VertexLabel::Finite(2), VertexLabel::Hub)?];
        for k in 2..n {
            edges.push(Edge::new(n, VertexLabel::Finite(k), VertexLabel::Finite(k + 1))?);
        }
        SpanningTree::from_edges(n, edges)
    }

    /// The star: every path vertex joined directly to the hub.
    pub fn star(n: u32) -> Result<SpanningTree, Error> {
        if n < 2 {
            return Err(Error::NTooSmall(n));
        }
        let edges: Result<Vec<_>, _> = (2..=n)
            .map(|k| Edge::new(n, VertexLabel::Finite(k), VertexLabel::Hub))
            .collect();
        SpanningTree::from_edges(n, edges?)
    }

    /// Parses the `;`-separated edge list produced by `Display`, accepting
    /// the edges in any order.
    pub fn parse(n: u32, s: &str) -> Result<SpanningTree, Error> {
        if n < 2 {
            return Err(Error::NTooSmall(n));
        }
        let mut edges = Vec::new();
        for token in s.split(';') {
            let token = token.trim();
            let (a, b) = token
                .split_once(',')
                .ok_or_else(|| Error::MalformedToken(token.to_owned()))?;
            let a: VertexLabel = a.trim().parse()?;
            let b: VertexLabel = b.trim().parse()?;
            edges.push(Edge::new(n, a, b)?);
        }
        SpanningTree::from_edges(n, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The edge membership bits, indexed by [`Edge::index`].
    pub fn bitset(&self) -> &EdgeBitset {
        &self.membership
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.membership.contains(e.index(self.n))
    }

    /// Membership test by endpoints; false when the pair is not a fan edge.
    pub fn has_edge(&self, a: VertexLabel, b: VertexLabel) -> bool {
        Edge::new(self.n, a, b).map(|e| self.contains(e)).unwrap_or(false)
    }

    /// The `n - 1` edges in canonical index order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.membership.iter_ones().map(|idx| Edge::from_index(self.n, idx))
    }

    /// Applies the exchange in place: `{pivot, removed}` leaves the tree,
    /// `{pivot, added}` enters it. Fails with [`Error::IllegalMove`] if the
    /// first edge is absent or the second already present; **the result is
    /// only guaranteed to be a tree if [`Self::is_valid_tree_move`] said
    /// so** — this method alone just exchanges the edges.
    pub fn apply_move(&mut self, m: EdgeMove) -> Result<(), Error> {
        let out_edge = Edge::new(self.n, m.pivot(), m.removed())?;
        let in_edge = Edge::new(self.n, m.pivot(), m.added())?;
        let out_idx = out_edge.index(self.n);
        let in_idx = in_edge.index(self.n);
        if !self.membership.contains(out_idx) {
            return Err(Error::IllegalMove(format!("edge {out_edge} is not in the tree")));
        }
        if self.membership.contains(in_idx) {
            return Err(Error::IllegalMove(format!("edge {in_edge} is already in the tree")));
        }
        self.membership.clear(out_idx);
        self.membership.set(in_idx);
        let list = &mut self.adj[Self::slot(out_edge.lo())];
        let pos = list
            .iter()
            .position(|&v| v == out_edge.hi())
            .expect("adjacency mirrors the membership bits");
        list.swap_remove(pos);
        self.adj[Self::slot(in_edge.lo())].push(in_edge.hi());
        Ok(())
    }

    /// Whether exchanging `{pivot, removed}` for `{pivot, added}` yields a
    /// spanning tree again. Errors under the same preconditions as
    /// [`Self::apply_move`].
    ///
    /// Dropping `{pivot, removed}` splits the tree in two; the exchange
    /// reconnects it exactly when the added endpoint lies on the removed
    /// endpoint's side of the split.
    pub fn is_valid_tree_move(&self, m: EdgeMove) -> Result<bool, Error> {
        let out_edge = Edge::new(self.n, m.pivot(), m.removed())?;
        let in_edge = Edge::new(self.n, m.pivot(), m.added())?;
        if !self.contains(out_edge) {
            return Err(Error::IllegalMove(format!("edge {out_edge} is not in the tree")));
        }
        if self.contains(in_edge) {
            return Err(Error::IllegalMove(format!("edge {in_edge} is already in the tree")));
        }
        Ok(self.reaches(m.removed(), m.added(), out_edge))
    }

    fn slot(v: VertexLabel) -> usize {
        match v {
            VertexLabel::Finite(k) => (k - 2) as usize,
            VertexLabel::Hub => unreachable!("hub edges are stored under their path endpoint"),
        }
    }

    /// BFS slot for any vertex, hub included.
    fn vertex_id(&self, v: VertexLabel) -> usize {
        match v {
            VertexLabel::Finite(k) => (k - 2) as usize,
            VertexLabel::Hub => (self.n - 1) as usize,
        }
    }

    /// Tree neighbours of `v`, in no particular order.
    fn neighbours(&self, v: VertexLabel, out: &mut Vec<VertexLabel>) {
        out.clear();
        match v {
            VertexLabel::Finite(k) => {
                // Edges stored under k...
                out.extend(self.adj[Self::slot(v)].iter().copied());
                // ...plus the path edge stored under k - 1.
                if k > 2 && self.has_edge(VertexLabel::Finite(k - 1), v) {
                    out.push(VertexLabel::Finite(k - 1));
                }
            }
            VertexLabel::Hub => {
                for k in 2..=self.n {
                    if self.has_edge(VertexLabel::Finite(k), VertexLabel::Hub) {
                        out.push(VertexLabel::Finite(k));
                    }
                }
            }
        }
    }

    /// True if `to` is reachable from `from` without crossing `skip`.
    fn reaches(&self, from: VertexLabel, to: VertexLabel, skip: Edge) -> bool {
        let mut seen = vec![false; self.n as usize];
        let mut queue = VecDeque::new();
        let mut nbrs = Vec::new();
        seen[self.vertex_id(from)] = true;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return true;
            }
            self.neighbours(v, &mut nbrs);
            for &w in &nbrs {
                if skip.touches(v) && skip.touches(w) {
                    continue;
                }
                let id = self.vertex_id(w);
                if !seen[id] {
                    seen[id] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n as usize];
        let mut queue = VecDeque::new();
        let mut nbrs = Vec::new();
        seen[0] = true;
        queue.push_back(VertexLabel::Finite(2));
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            self.neighbours(v, &mut nbrs);
            for &w in &nbrs {
                let id = self.vertex_id(w);
                if !seen[id] {
                    seen[id] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Cross-checks the two edge representations against each other.
    #[cfg(test)]
    fn assert_coherent(&self) {
        let mut from_adj: Vec<u32> = Vec::new();
        for (slot, list) in self.adj.iter().enumerate() {
            let k = slot as u32 + 2;
            for &hi in list {
                let e = Edge::new(self.n, VertexLabel::Finite(k), hi).unwrap();
                from_adj.push(e.index(self.n));
            }
        }
        from_adj.sort_unstable();
        let from_bits: Vec<u32> = self.membership.iter_ones().collect();
        assert_eq!(from_adj, from_bits, "adjacency lists diverged from the bitset");
    }
}

impl fmt::Display for SpanningTree {
    /// Edges in canonical index order, `lo,hi` each, joined by `;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.edges() {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}
