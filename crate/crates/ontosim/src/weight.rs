//! Arc weighting.
//!
//! Every is-a arc gets a weight from three ingredients: how deep the parent
//! sits (longest path from the root), where the child falls among the
//! parent's declared children, and how many nodes the ontology has:
//!
//! ```text
//! weight(parent -> child) = 1 / (depth(parent) + order(child) / (nodes + 1) + 1)
//! ```
//!
//! Deeper arcs and later siblings always weigh less, weights stay in (0, 1],
//! and the root's first arc weighs exactly 1.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{NodeId, NodeMeta, OntologyGraph};

/// One is-a arc together with its weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedArc {
    pub parent: NodeId,
    pub child: NodeId,
    pub weight: f64,
}

/// An ontology graph with every arc weighted, ready for path queries.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    graph: OntologyGraph,
    arcs: Vec<WeightedArc>,
    by_pair: HashMap<(NodeId, NodeId), f64>,
    upward: Vec<Vec<(NodeId, f64)>>,
}

/// Weight of a single arc, computed from the graph alone.
pub fn arc_weight(graph: &OntologyGraph, parent: NodeId, child: NodeId) -> Result<f64> {
    let depths = graph.max_depths();
    weight_with_depths(graph, &depths, parent, child)
}

fn weight_with_depths(
    graph: &OntologyGraph,
    depths: &[NodeMeta],
    parent: NodeId,
    child: NodeId,
) -> Result<f64> {
    let order = graph.sibling_order(parent, child)?;
    let depth = depths[parent.index()].max_depth;
    Ok(1.0 / (depth as f64 + order as f64 / (graph.node_count() as f64 + 1.0) + 1.0))
}

/// Weights every arc of `graph` in declaration order.
pub fn annotate_weights(graph: OntologyGraph) -> WeightedGraph {
    let depths = graph.max_depths();
    let mut arcs = Vec::with_capacity(graph.edges().len());
    let mut by_pair = HashMap::with_capacity(graph.edges().len());
    let mut upward = vec![Vec::new(); graph.node_count()];
    for &(parent, child) in graph.edges() {
        let weight =
            weight_with_depths(&graph, &depths, parent, child).expect("declared edges are arcs");
        arcs.push(WeightedArc {
            parent,
            child,
            weight,
        });
        by_pair.insert((parent, child), weight);
        upward[child.index()].push((parent, weight));
    }
    WeightedGraph {
        graph,
        arcs,
        by_pair,
        upward,
    }
}

impl WeightedGraph {
    /// The underlying graph.
    pub fn graph(&self) -> &OntologyGraph {
        &self.graph
    }

    /// All weighted arcs in declaration order.
    pub fn arcs(&self) -> &[WeightedArc] {
        &self.arcs
    }

    /// Weight of the arc `parent -> child`.
    pub fn weight(&self, parent: NodeId, child: NodeId) -> Result<f64> {
        self.by_pair
            .get(&(parent, child))
            .copied()
            .ok_or_else(|| Error::NotAnArc {
                parent: self.graph.label(parent).to_string(),
                child: self.graph.label(child).to_string(),
            })
    }

    /// Parents of `child` with the weight of each connecting arc.
    pub fn upward(&self, child: NodeId) -> &[(NodeId, f64)] {
        &self.upward[child.index()]
    }
}
