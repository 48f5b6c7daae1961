//! Randomized properties: serialization round trips, rank/unrank inverses,
//! and move application under arbitrary (often hostile) inputs.

use num_bigint::BigUint;
use proptest::prelude::*;

use fan_trees::graph::{EdgeMove, VertexLabel};
use fan_trees::rank::{rank, tree_count, unrank};
use fan_trees::tree::SpanningTree;

/// A fan size small enough that u64 ranks cover the whole range.
fn small_n() -> impl Strategy<Value = u32> {
    2u32..=14
}

fn label(n: u32, raw: u32) -> VertexLabel {
    // raw picks uniformly among v2..vn and the hub.
    match raw % n {
        0 => VertexLabel::Hub,
        k => VertexLabel::Finite(k + 1),
    }
}

proptest! {
    /// unrank -> serialize -> parse -> rank gets back to the same number.
    #[test]
    fn rank_survives_a_text_round_trip(
        (n, r) in small_n().prop_flat_map(|n| {
            let max: u64 = u64::try_from(&tree_count(n).unwrap()).unwrap();
            (Just(n), 1..=max)
        })
    ) {
        let r = BigUint::from(r);
        let tree = unrank(n, &r).unwrap();
        let text = tree.to_string();
        let back = SpanningTree::parse(n, &text).unwrap();
        prop_assert_eq!(back, tree);
        prop_assert_eq!(rank(n, &SpanningTree::parse(n, &text).unwrap()).unwrap(), r);
    }

    /// Random walks through valid moves keep the tree a spanning tree, and
    /// every move undoes exactly with its inverse.
    #[test]
    fn valid_moves_preserve_spanning_trees(
        n in small_n(),
        steps in prop::collection::vec((0u32..100, 0u32..100, 0u32..100), 0..60)
    ) {
        let mut tree = SpanningTree::path(n).unwrap();
        for (p, r, a) in steps {
            let mv = match EdgeMove::new(n, label(n, p), label(n, r), label(n, a)) {
                Ok(mv) => mv,
                Err(_) => continue, // not even a pair of fan edges
            };
            match tree.is_valid_tree_move(mv) {
                Ok(true) => {}
                _ => continue, // edge membership wrong or would disconnect
            }
            let before = tree.clone();
            tree.apply_move(mv).unwrap();
            // Still a spanning tree: rebuilding from the edge list succeeds.
            let rebuilt = SpanningTree::from_edges(n, tree.edges()).unwrap();
            prop_assert_eq!(&rebuilt, &tree);
            // And the inverse move is valid and restores the previous tree.
            let inv = mv.inverse();
            prop_assert_eq!(tree.is_valid_tree_move(inv).unwrap(), true);
            let mut undone = tree.clone();
            undone.apply_move(inv).unwrap();
            prop_assert_eq!(undone, before);
        }
    }

    /// Parsing arbitrary text never panics; success implies a clean
    /// serialize/parse round trip.
    #[test]
    fn parse_never_panics(n in 2u32..=10, text in ".{0,60}") {
        if let Ok(tree) = SpanningTree::parse(n, &text) {
            let again = SpanningTree::parse(n, &tree.to_string()).unwrap();
            prop_assert_eq!(again, tree);
        }
    }

    /// The same, on text shaped like edge lists (more likely to get deep
    /// into the parser than uniformly random bytes).
    #[test]
    fn parse_never_panics_on_edge_shaped_text(
        n in 2u32..=10,
        text in "((1?[0-9]|inf),(1?[0-9]|inf);){0,9}((1?[0-9]|inf),(1?[0-9]|inf))?"
    ) {
        if let Ok(tree) = SpanningTree::parse(n, &text) {
            let again = SpanningTree::parse(n, &tree.to_string()).unwrap();
            prop_assert_eq!(again, tree);
        }
    }

    /// Ranks outside 1..=t_n are rejected, never misassigned.
    #[test]
    fn out_of_range_ranks_are_rejected(n in small_n(), extra in 0u64..1000) {
        let max = tree_count(n).unwrap();
        prop_assert!(unrank(n, &BigUint::ZERO).is_err());
        let beyond = &max + BigUint::from(extra + 1);
        prop_assert!(unrank(n, &beyond).is_err());
    }
}
