//! Spanning trees of fan graphs: exhaustive listings in Gray-code order,
//! a greedy search that provably matches them, and rank/unrank into the
//! listing without generating it.
//!
//! The fan on `n` vertices is a path `v2 - ... - vn` plus a hub joined to
//! every path vertex. Its spanning trees — a Fibonacci number of them —
//! can be listed so that consecutive trees differ by removing one edge and
//! adding another around a shared pivot vertex:
//!
//! ```
//! use std::ops::ControlFlow;
//!
//! let mut count = 0u64;
//! fan_trees::recursive::visit_list(6, |_, _| {
//!     count += 1;
//!     ControlFlow::Continue(())
//! })
//! .unwrap();
//! assert_eq!(count, 55);
//! ```
//!
//! [`recursive`] produces the listing (forwards, backwards, streaming or
//! materialised), [`greedy`] grows it move by smallest move, [`rank`]
//! counts and indexes it, and [`oracle`] brute-forces small fans to verify
//! everything else.

#![forbid(unsafe_code)]

pub mod error;
pub mod graph;
pub mod greedy;
pub mod oracle;
pub mod rank;
pub mod recursive;
pub mod tree;

pub use error::Error;
pub use graph::{Edge, EdgeMove, VertexLabel};
pub use tree::{EdgeBitset, SpanningTree};
