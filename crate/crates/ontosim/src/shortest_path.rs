//! Shortest generalization path.
//!
//! Similarity only ever needs the cheapest route from a concept *up* to the
//! root, so this is Dijkstra over reversed arcs (child to parent) with two
//! twists:
//!
//! * it stops early, as soon as the root's label provably cannot improve:
//!   any future relaxation of the root costs at least the cheapest live
//!   frontier label plus the cheapest arc from the root to a child that has
//!   not been finalized yet;
//! * it can record a [`DijkstraTrace`] — one row per extraction showing
//!   every node's tentative weight and predecessor, which is how the CLI
//!   explains a path.
//!
//! Ties on the frontier break toward the earlier-loaded node, so runs are
//! deterministic for a fixed input file.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::NodeId;
use crate::weight::WeightedGraph;

/// A cheapest path from a concept up to the root.
#[derive(Debug, Clone, PartialEq)]
pub struct ConceptPath {
    pub start: NodeId,
    /// Nodes in walk order, `start` first, root last.
    pub nodes: Vec<NodeId>,
    /// Sum of the arc weights along `nodes`.
    pub total_weight: f64,
}

/// One snapshot of the search: tentative weights and predecessors after an
/// extraction (or after initialization, for the first row).
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    /// Tentative weight per node in load order; `None` is still-infinite.
    pub weights: Vec<Option<f64>>,
    /// Predecessor per node in load order: the node it was relaxed from.
    pub preds: Vec<Option<NodeId>>,
    /// Node finalized to produce this row; `None` on the initialization row.
    pub extracted: Option<NodeId>,
}

/// Full record of a search, one row per step.
#[derive(Debug, Clone, PartialEq)]
pub struct DijkstraTrace {
    pub start: NodeId,
    pub rows: Vec<TraceRow>,
}

/// Frontier entry ordered by weight, then by load order.
#[derive(Debug, Clone, Copy)]
struct Frontier {
    weight: f64,
    node: NodeId,
}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed so the max-heap pops the smallest entry first.
        other
            .weight
            .total_cmp(&self.weight)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Frontier {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frontier {}

/// Cheapest path from `start` to the root, with the step-by-step trace.
pub fn shortest_path_to_root(
    weighted: &WeightedGraph,
    start: NodeId,
) -> Result<(ConceptPath, DijkstraTrace)> {
    let (path, trace) = run(weighted, start, true)?;
    Ok((path, trace.expect("trace was requested")))
}

/// Cheapest path from `start` to the root, without trace bookkeeping.
pub fn concept_path(weighted: &WeightedGraph, start: NodeId) -> Result<ConceptPath> {
    Ok(run(weighted, start, false)?.0)
}

fn run(
    weighted: &WeightedGraph,
    start: NodeId,
    record: bool,
) -> Result<(ConceptPath, Option<DijkstraTrace>)> {
    let graph = weighted.graph();
    let count = graph.node_count();
    if start.index() >= count {
        return Err(Error::UnknownNode {
            label: format!("#{}", start.index()),
        });
    }
    let root = graph.root();

    let mut dist = vec![f64::INFINITY; count];
    let mut pred: Vec<Option<NodeId>> = vec![None; count];
    let mut extracted = vec![false; count];
    let mut heap = BinaryHeap::new();
    dist[start.index()] = 0.0;
    heap.push(Frontier {
        weight: 0.0,
        node: start,
    });

    let mut rows = Vec::new();
    let mut snapshot = |dist: &[f64], pred: &[Option<NodeId>], who: Option<NodeId>| {
        if !record {
            return;
        }
        rows.push(TraceRow {
            weights: dist.iter().map(|&d| d.is_finite().then_some(d)).collect(),
            preds: pred.to_vec(),
            extracted: who,
        });
    };
    snapshot(&dist, &pred, None);

    loop {
        while let Some(top) = heap.peek() {
            if extracted[top.node.index()] || top.weight > dist[top.node.index()] {
                heap.pop();
            } else {
                break;
            }
        }
        let frontier_min = heap.peek().map_or(f64::INFINITY, |top| top.weight);
        if root_settled(weighted, &dist, &extracted, frontier_min) {
            break;
        }
        let Some(Frontier { node, .. }) = heap.pop() else {
            break;
        };
        extracted[node.index()] = true;
        for &(parent, weight) in weighted.upward(node) {
            let candidate = dist[node.index()] + weight;
            if candidate < dist[parent.index()] {
                dist[parent.index()] = candidate;
                pred[parent.index()] = Some(node);
                heap.push(Frontier {
                    weight: candidate,
                    node: parent,
                });
            }
        }
        snapshot(&dist, &pred, Some(node));
    }

    let total_weight = dist[root.index()];
    if !total_weight.is_finite() {
        return Err(Error::UnreachableNode {
            label: graph.label(start).to_string(),
        });
    }

    let mut nodes = vec![root];
    while let Some(back) = pred[nodes.last().unwrap().index()] {
        nodes.push(back);
    }
    debug_assert_eq!(*nodes.last().unwrap(), start);
    nodes.reverse();

    let path = ConceptPath {
        start,
        nodes,
        total_weight,
    };
    let trace = record.then_some(DijkstraTrace { start, rows });
    Ok((path, trace))
}

/// True when no future relaxation can lower the root's label.
///
/// Every later improvement would come from extracting a not-yet-finalized
/// child of the root, and would cost at least that child's eventual label
/// (bounded below by the current frontier minimum) plus its arc weight.
/// Float addition is monotone, so comparing the two lower bounds is safe.
fn root_settled(
    weighted: &WeightedGraph,
    dist: &[f64],
    extracted: &[bool],
    frontier_min: f64,
) -> bool {
    let root = weighted.graph().root();
    let finalized = dist[root.index()];
    if !finalized.is_finite() {
        return false;
    }
    let cheapest_open_arc = weighted
        .graph()
        .children(root)
        .iter()
        .filter(|child| !extracted[child.index()])
        .map(|&child| weighted.weight(root, child).expect("children are arcs"))
        .fold(f64::INFINITY, f64::min);
    frontier_min + cheapest_open_arc >= finalized
}
