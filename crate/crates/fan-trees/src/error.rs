//! Error values shared across the crate.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{Edge, VertexLabel};

/// Everything that can go wrong when building graphs, moves, listings or
/// ranks. Parse failures keep enough detail to say *which* rule was broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Fan graphs start at two vertices (one path vertex plus the hub).
    #[error("fan graphs need at least 2 vertices, got {0}")]
    NTooSmall(u32),

    /// The two labels are not joined by an edge in the fan of the given order.
    #[error("({a},{b}) is not an edge of the fan on {n} vertices")]
    NotAnEdge { n: u32, a: VertexLabel, b: VertexLabel },

    /// An edge exchange whose preconditions do not hold on the current tree.
    #[error("illegal move: {0}")]
    IllegalMove(String),

    /// A token in a tree description that does not look like `lo,hi`.
    #[error("malformed edge token `{0}`")]
    MalformedToken(String),

    /// The same edge was listed twice in a tree description.
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    /// A tree on `n` vertices has exactly `n - 1` edges.
    #[error("expected {expected} edges, got {got}")]
    WrongEdgeCount { expected: usize, got: usize },

    /// The edge set has the right size but is cyclic or disconnected,
    /// or the tree does not belong to the fan order it was paired with.
    #[error("edge set is not a spanning tree of this fan")]
    NotASpanningTree,

    /// Listing positions are 1-based and bounded by the number of trees.
    #[error("rank {rank} out of range 1..={max}")]
    RankOutOfRange { rank: BigUint, max: BigUint },

    /// Brute-force enumeration is only feasible for small fans.
    #[error("exhaustive enumeration supports 2 <= n <= {max}, got {n}")]
    OracleRangeExceeded { n: u32, max: u32 },
}
