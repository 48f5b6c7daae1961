//! Counting, ranking and unranking against the generated listing order.
//!
//! The fan on `n` vertices has `f(2n-2)` spanning trees (every second
//! Fibonacci number, with `f(1) = f(2) = 1`). Ranks are 1-based positions
//! in the listing produced by [`crate::recursive::visit_list`] and are kept
//! as big integers, since the count outgrows u64 around n = 47.
//!
//! Both directions walk the same block structure the generator recurses
//! on, reading off at most four edges around the two top vertices per
//! step, so they run in O(n) big-integer operations without touching the
//! (exponentially long) listing itself.

use num_bigint::BigUint;

use crate::error::Error;
use crate::graph::{Edge, VertexLabel};
use crate::tree::{EdgeBitset, SpanningTree};

/// Fibonacci numbers `f(1), f(2), ...` precomputed far enough to count the
/// trees of every fan up to a chosen order.
pub struct FibTable {
    // fib[i] = f(i), with the convenient f(0) = 0.
    fib: Vec<BigUint>,
}

impl FibTable {
    /// Table sized for tree counts of every fan on `2..=max_n` vertices.
    pub fn for_max_n(max_n: u32) -> FibTable {
        let top = 2 * max_n.max(2) - 2;
        let mut fib = Vec::with_capacity(top as usize + 1);
        fib.push(BigUint::from(0u32));
        fib.push(BigUint::from(1u32));
        while fib.len() <= top as usize {
            let next = &fib[fib.len() - 1] + &fib[fib.len() - 2];
            fib.push(next);
        }
        FibTable { fib }
    }

    /// `f(i)`. Panics beyond the precomputed range.
    pub fn fibonacci(&self, i: u32) -> &BigUint {
        &self.fib[i as usize]
    }

    /// Number of spanning trees of the fan on `n` vertices: `f(2n-2)`.
    pub fn tree_count(&self, n: u32) -> Result<&BigUint, Error> {
        if n < 2 {
            return Err(Error::NTooSmall(n));
        }
        Ok(self.fibonacci(2 * n - 2))
    }
}

/// Number of spanning trees of the fan on `n` vertices.
pub fn tree_count(n: u32) -> Result<BigUint, Error> {
    FibTable::for_max_n(n).tree_count(n).cloned()
}

/// 1-based position of `tree` in the listing of the fan on `n` vertices.
///
/// Works down one block at a time: the edges at the current top vertex
/// `vk` say which of the four blocks the tree sits in, the block offsets
/// are tree counts of smaller fans, and backwards blocks flip the
/// remaining rank. The fans on up to 4 vertices are table lookups.
pub fn rank(n: u32, tree: &SpanningTree) -> Result<BigUint, Error> {
    if n < 2 {
        return Err(Error::NTooSmall(n));
    }
    if tree.n() != n {
        return Err(Error::NotASpanningTree);
    }
    let fib = FibTable::for_max_n(n);
    // Mutable scratch view: the var-edge block below rewrites one spoke.
    let mut bits = tree.bitset().clone();
    Ok(rank_below(&fib, n, &mut bits, n))
}

/// Rank of the sub-tree on `{v2..vk, hub}` encoded in `bits` (edges above
/// `vk` are ignored) within the listing of the k-vertex fan.
fn rank_below(fib: &FibTable, n: u32, bits: &mut EdgeBitset, k: u32) -> BigUint {
    let has = |bits: &EdgeBitset, a: u32, b_hub: Option<u32>| -> bool {
        let b = b_hub.map_or(VertexLabel::Hub, VertexLabel::Finite);
        bits.contains(Edge::new(n, VertexLabel::Finite(a), b).expect("fan edge").index(n))
    };
    if k <= 4 {
        return BigUint::from(base_rank(n, bits, k));
    }
    let top_path = has(bits, k, Some(k - 1));
    let top_spoke = has(bits, k, None);
    let t1 = fib.tree_count(k - 1).expect("k >= 5");
    match (top_path, top_spoke) {
        // Leading block: the listing of the smaller fan, unchanged.
        (true, false) => rank_below(fib, n, bits, k - 1),
        // Second block: the smaller listing walked backwards.
        (false, true) => (t1 * 2u32 + 1u32) - rank_below(fib, n, bits, k - 1),
        (true, true) => {
            let t1 = t1.clone();
            let t2 = fib.tree_count(k - 2).expect("k >= 5").clone();
            if has(bits, k - 2, None) {
                // Closing block: the two-smaller listing backwards, minus
                // its own leading block.
                (t1 * 2u32 + t2 * 2u32 + 1u32) - rank_below(fib, n, bits, k - 2)
            } else {
                if has(bits, k - 2, Some(k - 1)) {
                    // Var-edge block: vk-2 hangs on vk-1, which is about to
                    // drop out of view; its stand-in is the spoke.
                    let e3 = Edge::new(n, VertexLabel::Finite(k - 2), VertexLabel::Hub)
                        .expect("fan edge");
                    bits.set(e3.index(n));
                }
                t1 * 2u32 + rank_below(fib, n, bits, k - 2)
            }
        }
        (false, false) => unreachable!("vk must hang on vk-1 or the hub in a spanning tree"),
    }
}

/// Listing positions for the hand-checkable fans, read straight off the
/// edge pattern. Regenerated from the recursive listing by tests.
fn base_rank(n: u32, bits: &EdgeBitset, k: u32) -> u32 {
    let has = |a: u32, b_hub: Option<u32>| -> bool {
        let b = b_hub.map_or(VertexLabel::Hub, VertexLabel::Finite);
        bits.contains(Edge::new(n, VertexLabel::Finite(a), b).expect("fan edge").index(n))
    };
    match k {
        2 => {
            debug_assert!(has(2, None));
            1
        }
        3 => match (has(2, Some(3)), has(2, None), has(3, None)) {
            (true, true, false) => 1,
            (false, true, true) => 2,
            (true, false, true) => 3,
            other => unreachable!("not a spanning tree pattern on 3 vertices: {other:?}"),
        },
        4 => {
            let pattern = (
                has(2, Some(3)),
                has(2, None),
                has(3, Some(4)),
                has(3, None),
                has(4, None),
            );
            let pos = BASE4
                .iter()
                .position(|p| *p == pattern)
                .unwrap_or_else(|| unreachable!("not a spanning tree pattern on 4 vertices"));
            pos as u32 + 1
        }
        _ => unreachable!("base ranks stop at 4"),
    }
}

/// Edge patterns `({2,3}, {2,hub}, {3,4}, {3,hub}, {4,hub})` of the eight
/// trees of the 4-vertex fan, in listing order.
const BASE4: [(bool, bool, bool, bool, bool); 8] = [
    (true, true, true, false, false),
    (false, true, true, true, false),
    (true, false, true, true, false),
    (true, false, false, true, true),
    (false, true, false, true, true),
    (true, true, false, false, true),
    (false, true, true, false, true),
    (true, false, true, false, true),
];

/// The tree at 1-based position `r` of the listing of the fan on `n`
/// vertices. Fails with [`Error::RankOutOfRange`] outside `1..=tree_count(n)`.
pub fn unrank(n: u32, r: &BigUint) -> Result<SpanningTree, Error> {
    if n < 2 {
        return Err(Error::NTooSmall(n));
    }
    let fib = FibTable::for_max_n(n);
    let max = fib.tree_count(n)?;
    if r < &BigUint::from(1u32) || r > max {
        return Err(Error::RankOutOfRange {
            rank: r.clone(),
            max: max.clone(),
        });
    }
    let mut edges = Vec::with_capacity((n - 1) as usize);
    unrank_below(&fib, n, &mut edges, n, r.clone(), VertexLabel::Hub);
    SpanningTree::from_edges(n, edges)
}

/// Collects the edges of the rank-`r` tree of the k-vertex listing.
///
/// `spoke_for` is where `vk`'s spoke actually attaches: the hub normally,
/// but `vk+1` when the parent block replaced the spoke by its variable
/// edge. Deeper calls only ever substitute the spoke of their own top
/// vertex, so a single stand-in label suffices.
fn unrank_below(
    fib: &FibTable,
    n: u32,
    edges: &mut Vec<Edge>,
    k: u32,
    r: BigUint,
    spoke_for: VertexLabel,
) {
    let fin = VertexLabel::Finite;
    let e = |a: VertexLabel, b: VertexLabel| Edge::new(n, a, b).expect("fan edge");
    if k <= 4 {
        push_base(n, edges, k, &r, spoke_for);
        return;
    }
    let t1 = fib.tree_count(k - 1).expect("k >= 5").clone();
    let t2 = fib.tree_count(k - 2).expect("k >= 5").clone();
    let double_t1 = &t1 * 2u32;
    if r <= t1 {
        edges.push(e(fin(k), fin(k - 1)));
        unrank_below(fib, n, edges, k - 1, r, VertexLabel::Hub);
    } else if r <= double_t1 {
        edges.push(e(fin(k), spoke_for));
        unrank_below(fib, n, edges, k - 1, &double_t1 + 1u32 - r, VertexLabel::Hub);
    } else if r <= &double_t1 + &t2 {
        edges.push(e(fin(k), fin(k - 1)));
        edges.push(e(fin(k), spoke_for));
        unrank_below(fib, n, edges, k - 2, r - double_t1, fin(k - 1));
    } else {
        edges.push(e(fin(k), fin(k - 1)));
        edges.push(e(fin(k), spoke_for));
        let flipped = &double_t1 + &(&t2 * 2u32) + 1u32 - r;
        unrank_below(fib, n, edges, k - 2, flipped, VertexLabel::Hub);
    }
}

/// Trees of the hand-checkable fans by listing position, with the top
/// spoke rerouted to `spoke_for`. Mirrors [`BASE4`]; regenerated from the
/// recursive listing by tests.
fn push_base(n: u32, edges: &mut Vec<Edge>, k: u32, r: &BigUint, spoke_for: VertexLabel) {
    let fin = VertexLabel::Finite;
    let hub = VertexLabel::Hub;
    let e = |a: VertexLabel, b: VertexLabel| Edge::new(n, a, b).expect("fan edge");
    let r = u32::try_from(r).expect("base ranks are at most 8");
    match (k, r) {
        (2, 1) => edges.push(e(fin(2), spoke_for)),

        (3, 1) => edges.extend([e(fin(2), fin(3)), e(fin(2), hub)]),
        (3, 2) => edges.extend([e(fin(2), hub), e(fin(3), spoke_for)]),
        (3, 3) => edges.extend([e(fin(2), fin(3)), e(fin(3), spoke_for)]),

        (4, 1) => edges.extend([e(fin(2), fin(3)), e(fin(2), hub), e(fin(3), fin(4))]),
        (4, 2) => edges.extend([e(fin(2), hub), e(fin(3), fin(4)), e(fin(3), hub)]),
        (4, 3) => edges.extend([e(fin(2), fin(3)), e(fin(3), fin(4)), e(fin(3), hub)]),
        (4, 4) => edges.extend([e(fin(2), fin(3)), e(fin(3), hub), e(fin(4), spoke_for)]),
        (4, 5) => edges.extend([e(fin(2), hub), e(fin(3), hub), e(fin(4), spoke_for)]),
        (4, 6) => edges.extend([e(fin(2), fin(3)), e(fin(2), hub), e(fin(4), spoke_for)]),
        (4, 7) => edges.extend([e(fin(2), hub), e(fin(3), fin(4)), e(fin(4), spoke_for)]),
        (4, 8) => edges.extend([e(fin(2), fin(3)), e(fin(3), fin(4)), e(fin(4), spoke_for)]),

        _ => unreachable!("no base tree at rank {r} for k={k}"),
    }
}
