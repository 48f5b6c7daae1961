//! Recursive generation of the full spanning-tree listing.
//!
//! [`visit_list`] starts from the path tree and pushes every spanning tree
//! of the fan to a sink exactly once; consecutive trees differ by a single
//! pivot move, and the whole run costs O(1) amortised work per tree. The
//! listing of the fan on `n` vertices decomposes into four blocks over the
//! two edges at the top vertex `vn` (`{vn, vn-1}` and the spoke `{vn, hub}`):
//! trees with only the path edge, then — mirrored — trees with only the
//! spoke, then trees with both, split by how `vn-1` hangs on. Each block is
//! a smaller listing run forwards or backwards, which is why every
//! recursion here comes in a `descend`/`backtrack` pair that are exact
//! operation-by-operation reversals of each other.
//!
//! [`visit_rev_list`] walks the same listing from its last tree back to the
//! path; [`TreeIter`] adapts the push interface to a pull iterator.

use std::ops::ControlFlow;
use std::sync::mpsc;
use std::thread;

use crate::error::Error;
use crate::graph::{EdgeMove, VertexLabel};
use crate::tree::SpanningTree;

/// Instrumentation for one generation run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenStats {
    /// Trees handed to the sink (the initial tree counts).
    pub trees: u64,
    /// Recursive calls entered, `descend` and `backtrack` combined. Bounded
    /// by twice the number of trees.
    pub calls: u64,
    /// Deepest recursion reached; grows linearly with `n`, never with the
    /// (exponential) number of trees.
    pub max_depth: u32,
    /// False when the sink stopped the run early.
    pub completed: bool,
}

/// Sinks receive the move that produced the current tree (`None` for the
/// starting tree) plus the tree itself, and may stop the run.
pub type SinkFlow = ControlFlow<()>;

/// Recursion driver: owns the evolving tree and the sink.
///
/// [`Generator::descend`] and [`Generator::backtrack`] expose the raw
/// stage-level recursion. They assume the tree is in the state the parent
/// stage established — start from [`SpanningTree::path`] with
/// `descend(n, true, false)` (that is what [`visit_list`] does) unless you
/// are reproducing an inner stage deliberately. A structurally impossible
/// exchange panics: it cannot arise from a correct call sequence.
pub struct Generator<F> {
    n: u32,
    tree: SpanningTree,
    sink: F,
    trees: u64,
    calls: u64,
    depth: u32,
    max_depth: u32,
}

impl<F> Generator<F>
where
    F: FnMut(Option<&EdgeMove>, &SpanningTree) -> SinkFlow,
{
    pub fn new(start: SpanningTree, sink: F) -> Generator<F> {
        Generator {
            n: start.n(),
            tree: start,
            sink,
            trees: 0,
            calls: 0,
            depth: 0,
            max_depth: 0,
        }
    }

    /// Hands the current tree to the sink without a move, counting it as
    /// emitted. Call once before the top-level recursion.
    pub fn emit_current(&mut self) -> SinkFlow {
        self.trees += 1;
        (self.sink)(None, &self.tree)
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    /// Stats so far; `completed` is filled in by the run wrappers.
    fn stats(&self, completed: bool) -> GenStats {
        GenStats {
            trees: self.trees,
            calls: self.calls,
            max_depth: self.max_depth,
            completed,
        }
    }

    /// Applies one exchange at `pivot` and emits the result.
    fn exchange(&mut self, pivot: VertexLabel, from: VertexLabel, to: VertexLabel) -> SinkFlow {
        let mv = EdgeMove::new(self.n, pivot, from, to)
            .unwrap_or_else(|e| panic!("generator produced an impossible move: {e}"));
        self.tree
            .apply_move(mv)
            .unwrap_or_else(|e| panic!("generator lost track of the tree: {e}"));
        self.trees += 1;
        (self.sink)(Some(&mv), &self.tree)
    }

    fn enter(&mut self) {
        self.calls += 1;
        self.depth += 1;
        if self.depth > self.max_depth {
            self.max_depth = self.depth;
        }
    }

    /// Emits the rest of the sub-listing for the fan on `k` vertices,
    /// continuing from the tree as it stands. `s1` covers the leading
    /// block (everything keeping `{vk, vk-1}` without the spoke); when the
    /// caller does not need `vk`'s edge to finish on the hub spoke,
    /// `var_edge` redirects the block's closing exchange to `{vk, vk+1}`.
    pub fn descend(&mut self, k: u32, s1: bool, var_edge: bool) -> SinkFlow {
        use VertexLabel::{Finite, Hub};
        self.enter();
        match k {
            2 => {
                if var_edge {
                    self.exchange(Finite(2), Hub, Finite(3))?;
                }
            }
            3 => {
                if s1 {
                    if var_edge {
                        self.exchange(Finite(3), Finite(2), Finite(4))?;
                    } else {
                        self.exchange(Finite(3), Finite(2), Hub)?;
                    }
                }
                self.exchange(Finite(2), Hub, Finite(3))?;
            }
            _ => {
                if s1 {
                    self.descend(k - 1, true, false)?;
                    if var_edge {
                        self.exchange(Finite(k), Finite(k - 1), Finite(k + 1))?;
                    } else {
                        self.exchange(Finite(k), Finite(k - 1), Hub)?;
                    }
                }
                self.backtrack(k - 1, true, false)?;
                self.exchange(Finite(k - 1), Finite(k - 2), Finite(k))?;
                self.descend(k - 2, true, true)?;
                if k > 4 {
                    self.exchange(Finite(k - 2), Finite(k - 1), Hub)?;
                }
                self.backtrack(k - 2, false, false)?;
            }
        }
        self.depth -= 1;
        ControlFlow::Continue(())
    }

    /// Exact reversal of [`Generator::descend`] with the same arguments:
    /// applies the inverse exchanges in the opposite order, so running one
    /// after the other restores the tree it started from.
    pub fn backtrack(&mut self, k: u32, s1: bool, var_edge: bool) -> SinkFlow {
        use VertexLabel::{Finite, Hub};
        self.enter();
        match k {
            2 => {
                if var_edge {
                    self.exchange(Finite(2), Finite(3), Hub)?;
                }
            }
            3 => {
                self.exchange(Finite(2), Finite(3), Hub)?;
                if s1 {
                    if var_edge {
                        self.exchange(Finite(3), Finite(4), Finite(2))?;
                    } else {
                        self.exchange(Finite(3), Hub, Finite(2))?;
                    }
                }
            }
            _ => {
                self.descend(k - 2, false, false)?;
                if k > 4 {
                    self.exchange(Finite(k - 2), Hub, Finite(k - 1))?;
                }
                self.backtrack(k - 2, true, true)?;
                self.exchange(Finite(k - 1), Finite(k), Finite(k - 2))?;
                self.descend(k - 1, true, false)?;
                if s1 {
                    if var_edge {
                        self.exchange(Finite(k), Finite(k + 1), Finite(k - 1))?;
                    } else {
                        self.exchange(Finite(k), Hub, Finite(k - 1))?;
                    }
                    self.backtrack(k - 1, true, false)?;
                }
            }
        }
        self.depth -= 1;
        ControlFlow::Continue(())
    }
}

/// Pushes the full listing to `sink`, first tree (the path) included.
/// Returns the run's instrumentation; a sink `Break` stops early and shows
/// up as `completed: false`.
pub fn visit_list<F>(n: u32, sink: F) -> Result<GenStats, Error>
where
    F: FnMut(Option<&EdgeMove>, &SpanningTree) -> SinkFlow,
{
    let mut g = Generator::new(SpanningTree::path(n)?, sink);
    let flow = match g.emit_current() {
        ControlFlow::Continue(()) => g.descend(n, true, false),
        stopped => stopped,
    };
    Ok(g.stats(flow.is_continue()))
}

/// Pushes the reversed listing to `sink`, starting from the listing's last
/// tree and ending on the path.
pub fn visit_rev_list<F>(n: u32, sink: F) -> Result<GenStats, Error>
where
    F: FnMut(Option<&EdgeMove>, &SpanningTree) -> SinkFlow,
{
    let mut g = Generator::new(last_tree(n)?, sink);
    let flow = match g.emit_current() {
        ControlFlow::Continue(()) => g.backtrack(n, true, false),
        stopped => stopped,
    };
    Ok(g.stats(flow.is_continue()))
}

/// The whole listing, materialised. Memory-hungry for large `n`; prefer
/// [`visit_list`] or [`iter_list`] past a few million trees.
pub fn list(n: u32) -> Result<Vec<SpanningTree>, Error> {
    let mut out = Vec::new();
    visit_list(n, |_, t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The listing in reverse order, materialised.
pub fn rev_list(n: u32) -> Result<Vec<SpanningTree>, Error> {
    let mut out = Vec::new();
    visit_rev_list(n, |_, t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The last tree of the listing, in O(n) time and space.
///
/// The closing block of the listing on `k` vertices ends on the closing
/// tree of the listing on `k - 3` vertices plus the spoke at `vk-2` and
/// both edges at `vk`; peeling three vertices at a time bottoms out in the
/// hand-checkable small fans. (`rev_list` replays the listing from here,
/// and the round-trip tests pin this shortcut to the full recursion.)
pub fn last_tree(n: u32) -> Result<SpanningTree, Error> {
    use VertexLabel::{Finite, Hub};
    if n < 2 {
        return Err(Error::NTooSmall(n));
    }
    let e = |a, b| crate::graph::Edge::new(n, a, b).expect("fan edge");
    let mut edges = Vec::with_capacity((n - 1) as usize);
    let mut k = n;
    while k > 4 {
        edges.push(e(Finite(k), Hub));
        edges.push(e(Finite(k - 1), Finite(k)));
        edges.push(e(Finite(k - 2), Hub));
        k -= 3;
    }
    match k {
        2 => edges.push(e(Finite(2), Hub)),
        3 => {
            edges.push(e(Finite(2), Finite(3)));
            edges.push(e(Finite(3), Hub));
        }
        _ => {
            edges.push(e(Finite(2), Finite(3)));
            edges.push(e(Finite(3), Finite(4)));
            edges.push(e(Finite(4), Hub));
        }
    }
    SpanningTree::from_edges(n, edges)
}

/// Pull-style adapter over [`visit_list`]: a background thread runs the
/// recursion and each item crosses a bounded channel. Handy for `for`
/// loops; costs a tree clone per item, so hot paths should use the sink
/// interface directly. Dropping the iterator stops the producer.
pub struct TreeIter {
    rx: Option<mpsc::Receiver<(Option<EdgeMove>, SpanningTree)>>,
    handle: Option<thread::JoinHandle<()>>,
}

/// Iterates the listing as `(move, tree)` pairs; the first pair carries no
/// move.
pub fn iter_list(n: u32) -> Result<TreeIter, Error> {
    SpanningTree::path(n)?; // validate n before spawning
    Ok(spawn_iter(n, false))
}

/// [`iter_list`] in reverse order.
pub fn iter_rev_list(n: u32) -> Result<TreeIter, Error> {
    SpanningTree::path(n)?;
    Ok(spawn_iter(n, true))
}

fn spawn_iter(n: u32, reverse: bool) -> TreeIter {
    let (tx, rx) = mpsc::sync_channel(256);
    let handle = thread::spawn(move || {
        let sink = move |mv: Option<&EdgeMove>, t: &SpanningTree| {
            if tx.send((mv.copied(), t.clone())).is_ok() {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(()) // consumer went away
            }
        };
        let run = if reverse {
            visit_rev_list(n, sink)
        } else {
            visit_list(n, sink)
        };
        run.expect("n was validated before the thread started");
    });
    TreeIter {
        rx: Some(rx),
        handle: Some(handle),
    }
}

impl Iterator for TreeIter {
    type Item = (Option<EdgeMove>, SpanningTree);

    fn next(&mut self) -> Option<Self::Item> {
        self.rx.as_ref()?.recv().ok()
    }
}

impl Drop for TreeIter {
    fn drop(&mut self) {
        // Closing the channel makes the producer's next send fail, which
        // stops its run; then wait for it.
        self.rx.take();
        if let Some(h) = self.handle.take() {
            let _ = h.join();
        }
    }
}
