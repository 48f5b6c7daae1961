//! Brute-force reference enumeration and listing verification.
//!
//! Everything here double-checks the fast generators by independent means:
//! spanning trees are found by trying every `(n-1)`-subset of fan edges
//! against a plain union-find, so none of the machinery under test is
//! trusted. Feasible for small fans only — the subset count is
//! `C(2n-3, n-1)`.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::{fan_edge_count, Edge, VertexLabel};
use crate::tree::SpanningTree;

/// Largest fan the exhaustive enumeration accepts.
pub const MAX_ORACLE_N: u32 = 14;

/// Union-find over the fan's vertices, used for cycle detection. Kept local
/// so the oracle does not rely on the tree type's own validity checks.
struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(len: u32) -> UnionFind {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Merges the two classes; false if they were already joined (so the
    /// connecting edge would close a cycle).
    fn union(&mut self, a: u32, b: u32) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            self.parent[ra as usize] = rb;
            true
        }
    }
}

/// Oracle-side vertex numbering: path vertex `k` -> `k - 2`, hub -> `n - 1`.
fn vid(n: u32, v: VertexLabel) -> u32 {
    match v {
        VertexLabel::Finite(k) => k - 2,
        VertexLabel::Hub => n - 1,
    }
}

/// Edge list acyclic under union-find? With exactly `n - 1` edges on `n`
/// vertices this is equivalent to being a spanning tree.
fn acyclic(n: u32, edges: &[Edge]) -> bool {
    let mut uf = UnionFind::new(n);
    edges.iter().all(|e| uf.union(vid(n, e.lo()), vid(n, e.hi())))
}

/// Every spanning tree of the fan on `n` vertices, found by exhaustive
/// subset search. The result carries no duplicates; its order is the
/// lexicographic order of the edge-index subsets, which is unrelated to
/// any generator's order.
pub fn enumerate_all(n: u32) -> Result<Vec<SpanningTree>, Error> {
    if n < 2 {
        return Err(Error::NTooSmall(n));
    }
    if n > MAX_ORACLE_N {
        return Err(Error::OracleRangeExceeded { n, max: MAX_ORACLE_N });
    }
    let m = fan_edge_count(n);
    let pick = n - 1;
    let universe: Vec<Edge> = (0..m).map(|i| Edge::from_index(n, i)).collect();

    let mut found = Vec::new();
    // Standard lexicographic combination walk over index arrays.
    let mut combo: Vec<u32> = (0..pick).collect();
    let mut edges: Vec<Edge> = Vec::with_capacity(pick as usize);
    loop {
        edges.clear();
        edges.extend(combo.iter().map(|&i| universe[i as usize]));
        if acyclic(n, &edges) {
            let tree = SpanningTree::from_edges(n, edges.iter().copied())
                .expect("the union-find and the tree constructor must agree");
            found.push(tree);
        }
        // Advance the combination.
        let mut i = pick;
        loop {
            if i == 0 {
                return Ok(found);
            }
            i -= 1;
            if combo[i as usize] != i + m - pick {
                break;
            }
        }
        combo[i as usize] += 1;
        for j in i + 1..pick {
            combo[j as usize] = combo[(j - 1) as usize] + 1;
        }
    }
}

/// Outcome of checking a listing against the brute-force enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: u32,
    /// Number of entries in the checked listing.
    pub tree_total: u64,
    /// No tree appears twice.
    pub distinct: bool,
    /// Every spanning tree of the fan appears.
    pub exhaustive: bool,
    /// Consecutive entries differ by one removed and one added edge that
    /// share an endpoint.
    pub pivot_ok: bool,
    /// Earliest listing index where some check fails, with a description.
    /// Missing trees are reported at index `tree_total`.
    pub first_violation: Option<(usize, String)>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.distinct && self.exhaustive && self.pivot_ok
    }
}

/// Checks that `listing` is a gapless tour of all spanning trees of the fan
/// on `n` vertices: valid entries, no repeats, nothing missing, and every
/// consecutive pair one pivot move apart.
pub fn verify_listing(n: u32, listing: &[SpanningTree]) -> Result<VerificationReport, Error> {
    let expected = enumerate_all(n)?;
    let expected: HashSet<&SpanningTree> = expected.iter().collect();

    let mut violations: Vec<(usize, String)> = Vec::new();

    // Element validity, re-checked with the oracle's own union-find.
    let mut valid = true;
    for (i, t) in listing.iter().enumerate() {
        let edges: Vec<Edge> = t.edges().collect();
        if t.n() != n || edges.len() != (n - 1) as usize || !acyclic(n, &edges) {
            valid = false;
            violations.push((i, format!("entry {i} is not a spanning tree of the fan on {n} vertices")));
            break;
        }
    }

    let mut distinct = true;
    let mut seen: HashSet<&SpanningTree> = HashSet::new();
    for (i, t) in listing.iter().enumerate() {
        if !seen.insert(t) {
            distinct = false;
            violations.push((i, format!("entry {i} repeats an earlier tree")));
            break;
        }
    }

    let mut exhaustive = valid && seen.len() == expected.len();
    if valid {
        for (i, t) in listing.iter().enumerate() {
            if !expected.contains(t) {
                exhaustive = false;
                violations.push((i, format!("entry {i} is not a tree of this fan")));
                break;
            }
        }
        if seen.len() < expected.len() {
            let missing = expected.len() - seen.len();
            violations.push((listing.len(), format!("{missing} spanning trees never appear")));
        }
    }

    let mut pivot_ok = true;
    for (i, pair) in listing.windows(2).enumerate() {
        match pivot_move_between(&pair[0], &pair[1]) {
            Some(_) => {}
            None => {
                pivot_ok = false;
                violations.push((
                    i + 1,
                    format!("entries {i} and {} do not differ by one pivot move", i + 1),
                ));
                break;
            }
        }
    }

    violations.sort_by_key(|v| v.0);
    Ok(VerificationReport {
        n,
        tree_total: listing.len() as u64,
        distinct,
        exhaustive,
        pivot_ok,
        first_violation: violations.into_iter().next(),
    })
}

/// The single edge exchange turning `a` into `b`, if the two trees differ
/// by exactly one removed and one added edge sharing an endpoint.
pub fn pivot_move_between(a: &SpanningTree, b: &SpanningTree) -> Option<(Edge, Edge)> {
    if a.n() != b.n() {
        return None;
    }
    let d = a.bitset().diff(b.bitset());
    if d.len() != 2 {
        return None;
    }
    let (removed, added) = match (d[0], d[1]) {
        ((i, true), (j, false)) => (i, j),
        ((i, false), (j, true)) => (j, i),
        _ => return None,
    };
    let removed = Edge::from_index(a.n(), removed);
    let added = Edge::from_index(a.n(), added);
    let shares = removed.touches(added.lo()) || removed.touches(added.hi());
    shares.then_some((removed, added))
}

/// Element-wise equality of two listings.
pub fn listings_equal(a: &[SpanningTree], b: &[SpanningTree]) -> bool {
    first_divergence(a, b).is_none()
}

/// Index of the first position where the listings disagree (a length
/// mismatch diverges at the shorter length), or None when identical.
pub fn first_divergence(a: &[SpanningTree], b: &[SpanningTree]) -> Option<usize> {
    for (i, (x, y)) in a.iter().zip(b.iter()).enumerate() {
        if x != y {
            return Some(i);
        }
    }
    if a.len() != b.len() {
        Some(a.len().min(b.len()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent closed form for the tree count: every second Fibonacci
    /// number, computed locally so this test shares nothing with the fast
    /// counting code.
    fn fib_tree_count(n: u32) -> u64 {
        let (mut a, mut b) = (1u64, 1u64); // f1, f2
        // After k steps `b` holds f_{k+1}; the tree count is f_{2n-2}.
        for _ in 0..(2 * n - 3) {
            let c = a + b;
            a = b;
            b = c;
        }
        a
    }

    #[test]
    fn counts_match_the_closed_form() {
        let direct: Vec<u64> = (2..=9).map(|n| enumerate_all(n).unwrap().len() as u64).collect();
        assert_eq!(direct, vec![1, 3, 8, 21, 55, 144, 377, 987]);
        for n in 2..=9 {
            assert_eq!(direct[(n - 2) as usize], fib_tree_count(n));
        }
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        for n in 2..=8 {
            let all = enumerate_all(n).unwrap();
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            for t in &all {
                assert_eq!(t.n(), n);
                assert_eq!(t.bitset().count_ones(), n - 1);
            }
        }
    }

    #[test]
    fn range_limits() {
        assert!(matches!(enumerate_all(1), Err(Error::NTooSmall(1))));
        assert!(matches!(
            enumerate_all(15),
            Err(Error::OracleRangeExceeded { n: 15, max: MAX_ORACLE_N })
        ));
    }

    #[test]
    fn divergence_positions() {
        let a = enumerate_all(4).unwrap();
        assert_eq!(first_divergence(&a, &a), None);
        assert!(listings_equal(&a, &a));

        let mut b = a.clone();
        b.swap(2, 5);
        assert_eq!(first_divergence(&a, &b), Some(2));
        assert!(!listings_equal(&a, &b));

        let shorter = &a[..6];
        assert_eq!(first_divergence(&a, shorter), Some(6));
    }

    #[test]
    fn verify_flags_duplicates_and_gaps() {
        // The raw enumeration order is *not* a pivot sequence, so build the
        // checks from doctored listings over n = 4.
        let all = enumerate_all(4).unwrap();

        // A duplicated entry breaks distinctness and (by pigeonhole) leaves
        // something out.
        let mut dup = all.clone();
        dup[3] = dup[2].clone();
        let rep = verify_listing(4, &dup).unwrap();
        assert!(!rep.distinct);
        assert!(!rep.exhaustive);
        assert!(!rep.all_ok());
        assert!(rep.first_violation.is_some());

        // A truncated listing is distinct but not exhaustive; the missing
        // trees are reported at the end index.
        let rep = verify_listing(4, &all[..5]).unwrap();
        assert!(rep.distinct);
        assert!(!rep.exhaustive);
        assert_eq!(rep.tree_total, 5);

        // An empty listing is vacuously distinct and pivot-connected.
        let rep = verify_listing(4, &[]).unwrap();
        assert!(rep.distinct && rep.pivot_ok && !rep.exhaustive);
    }

    #[test]
    fn pivot_pairs_require_a_shared_endpoint() {
        let a = SpanningTree::parse(5, "2,inf;2,3;3,4;4,5").unwrap();
        // One exchange at vertex 5: {4,5} out, {5,inf} in.
        let b = SpanningTree::parse(5, "2,inf;2,3;3,4;5,inf").unwrap();
        assert!(pivot_move_between(&a, &b).is_some());
        // Two spokes always share the hub, so {2,inf} -> {5,inf} still
        // counts as a pivot move.
        let c = SpanningTree::parse(5, "2,3;3,4;4,5;5,inf").unwrap();
        assert!(pivot_move_between(&a, &c).is_some());
        // {2,3} out, {5,inf} in: disjoint endpoints, not a pivot move,
        // even though both sides are spanning trees.
        let d = SpanningTree::parse(5, "2,inf;3,4;4,5;5,inf").unwrap();
        assert!(pivot_move_between(&a, &d).is_none());
        // Identical trees differ by zero edges: not a move.
        assert!(pivot_move_between(&a, &a).is_none());
        // Two exchanges at once is not a single move either.
        let e = SpanningTree::parse(5, "3,inf;2,3;3,4;5,inf").unwrap();
        assert!(pivot_move_between(&a, &e).is_none());
    }
}
