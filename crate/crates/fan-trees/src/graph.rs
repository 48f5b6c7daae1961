//! Vertices, edges and edge moves of the fan graph.
//!
//! The fan on `n >= 2` vertices is a path `v2 - v3 - ... - vn` plus a hub
//! vertex adjacent to every path vertex, giving `2n - 3` edges in total.
//! Path vertices are ordered numerically and the hub sits above all of
//! them; that single ordering drives the canonical edge indexing, the text
//! format, and the move priority used by the greedy generator.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A vertex of the fan: a path vertex `v2..vn`, or the hub.
///
/// The derived order places `Finite(i) < Finite(j)` for `i < j` and every
/// finite vertex below `Hub`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Finite(u32),
    Hub,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Finite(k) => write!(f, "{k}"),
            VertexLabel::Hub => write!(f, "inf"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    /// Accepts `inf` for the hub and a decimal number for a path vertex.
    /// Range checking against a particular fan happens in [`Edge::new`].
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "inf" {
            Ok(VertexLabel::Hub)
        } else {
            s.parse::<u32>()
                .map(VertexLabel::Finite)
                .map_err(|_| Error::MalformedToken(s.to_owned()))
        }
    }
}

/// Number of edges of the fan on `n` vertices: `n - 2` path edges plus
/// `n - 1` spokes.
pub fn fan_edge_count(n: u32) -> u32 {
    2 * n - 3
}

/// An undirected edge of the fan, stored with its endpoints in label order
/// (`lo < hi`), so the hub can only ever appear as the `hi` endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexLabel,
    hi: VertexLabel,
}

impl Edge {
    /// Builds the edge `{a, b}` of the fan on `n` vertices, normalising the
    /// endpoint order. Fails unless the pair really is a fan edge: two
    /// consecutive path vertices in `2..=n`, or a path vertex and the hub.
    pub fn new(n: u32, a: VertexLabel, b: VertexLabel) -> Result<Edge, Error> {
        if n < 2 {
            return Err(Error::NTooSmall(n));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let ok = match (lo, hi) {
            (VertexLabel::Finite(i), VertexLabel::Finite(j)) => i >= 2 && j == i + 1 && j <= n,
            (VertexLabel::Finite(i), VertexLabel::Hub) => (2..=n).contains(&i),
            _ => false,
        };
        if ok {
            Ok(Edge { lo, hi })
        } else {
            Err(Error::NotAnEdge { n, a, b })
        }
    }

    pub fn lo(&self) -> VertexLabel {
        self.lo
    }

    pub fn hi(&self) -> VertexLabel {
        self.hi
    }

    /// True if `v` is one of the endpoints.
    pub fn touches(&self, v: VertexLabel) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint at all.
    pub fn other(&self, v: VertexLabel) -> Option<VertexLabel> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    /// Position of this edge when all `2n - 3` edges of the fan are sorted
    /// by `(lo, hi)`: `{k, k+1}` lands at `2(k-2)`, `{k, hub}` right after
    /// it at `2(k-2) + 1`, and the last spoke `{n, hub}` closes the list at
    /// `2n - 4`.
    ///
    /// The edge must belong to the fan on `n` vertices (checked in debug
    /// builds).
    pub fn index(&self, n: u32) -> u32 {
        debug_assert!(
            Edge::new(n, self.lo, self.hi).is_ok(),
            "{self} is not an edge of the fan on {n} vertices"
        );
        match (self.lo, self.hi) {
            (VertexLabel::Finite(k), VertexLabel::Finite(_)) => 2 * (k - 2),
            (VertexLabel::Finite(k), VertexLabel::Hub) if k == n => 2 * n - 4,
            (VertexLabel::Finite(k), VertexLabel::Hub) => 2 * (k - 2) + 1,
            _ => unreachable!("hub is never the low endpoint"),
        }
    }

    /// Inverse of [`Edge::index`]: the edge sitting at position `idx`.
    ///
    /// # Panics
    ///
    /// Panics if `n < 2` or `idx >= 2n - 3`.
    pub fn from_index(n: u32, idx: u32) -> Edge {
        assert!(n >= 2 && idx < fan_edge_count(n), "edge index {idx} out of range for n={n}");
        let edge = if idx == 2 * n - 4 {
            Edge::new(n, VertexLabel::Finite(n), VertexLabel::Hub)
        } else if idx.is_multiple_of(2) {
            let k = idx / 2 + 2;
            Edge::new(n, VertexLabel::Finite(k), VertexLabel::Finite(k + 1))
        } else {
            let k = (idx - 1) / 2 + 2;
            Edge::new(n, VertexLabel::Finite(k), VertexLabel::Hub)
        };
        edge.expect("in-range index maps to a fan edge")
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lo, self.hi)
    }
}

/// An edge exchange around a shared vertex: remove `{pivot, removed}` and
/// add `{pivot, added}`.
///
/// The derived order compares the pivot first, then the removed endpoint,
/// then the added endpoint (all under the [`VertexLabel`] order). This is
/// the priority in which the greedy generator scans candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeMove {
    pivot: VertexLabel,
    removed: VertexLabel,
    added: VertexLabel,
}

impl EdgeMove {
    /// Builds a move for the fan on `n` vertices. Both `{pivot, removed}`
    /// and `{pivot, added}` must be fan edges, and the two endpoints must
    /// differ (a move always exchanges two distinct edges).
    pub fn new(
        n: u32,
        pivot: VertexLabel,
        removed: VertexLabel,
        added: VertexLabel,
    ) -> Result<EdgeMove, Error> {
        Edge::new(n, pivot, removed)?;
        Edge::new(n, pivot, added)?;
        if removed == added {
            return Err(Error::IllegalMove(
                "removed and added endpoints coincide".to_owned(),
            ));
        }
        Ok(EdgeMove { pivot, removed, added })
    }

    pub fn pivot(&self) -> VertexLabel {
        self.pivot
    }

    pub fn removed(&self) -> VertexLabel {
        self.removed
    }

    pub fn added(&self) -> VertexLabel {
        self.added
    }

    /// The move that undoes this one: same pivot, endpoints swapped.
    pub fn inverse(&self) -> EdgeMove {
        EdgeMove {
            pivot: self.pivot,
            removed: self.added,
            added: self.removed,
        }
    }
}

impl fmt::Display for EdgeMove {
    /// `-u,v +u,w` for "remove `{u,v}`, add `{u,w}`".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-{},{} +{},{}", self.pivot, self.removed, self.pivot, self.added)
    }
}
