//! Brute-force oracles and a random-ontology generator shared by the
//! integration suites. Everything here recomputes results by exhaustive
//! enumeration so the library's algorithms have something independent to
//! answer to; graphs stay small enough for that to be instant.

// Not every suite uses every oracle.
#![allow(dead_code)]

use ontosim::{NodeId, OntologyGraph, WeightedGraph};
use rand::prelude::*;

/// Every upward walk from `from` to the root, as node sequences.
pub fn all_upward_paths(graph: &OntologyGraph, from: NodeId) -> Vec<Vec<NodeId>> {
    let mut paths = Vec::new();
    let mut walk = vec![from];
    extend_upward(graph, &mut walk, &mut paths);
    paths
}

fn extend_upward(graph: &OntologyGraph, walk: &mut Vec<NodeId>, paths: &mut Vec<Vec<NodeId>>) {
    let here = *walk.last().unwrap();
    if here == graph.root() {
        paths.push(walk.clone());
        return;
    }
    for &parent in graph.parents(here) {
        walk.push(parent);
        extend_upward(graph, walk, paths);
        walk.pop();
    }
}

/// Weight of a walk, accumulated the way the search accumulates it:
/// left to right from the start node.
pub fn walk_weight(weighted: &WeightedGraph, walk: &[NodeId]) -> f64 {
    walk.windows(2).fold(0.0, |acc, step| {
        acc + weighted.weight(step[1], step[0]).unwrap()
    })
}

/// Cheapest upward walks by exhaustive enumeration: the minimal total and
/// every walk achieving it bit for bit.
pub fn cheapest_walks(weighted: &WeightedGraph, from: NodeId) -> (f64, Vec<Vec<NodeId>>) {
    let all = all_upward_paths(weighted.graph(), from);
    let best = all
        .iter()
        .map(|walk| walk_weight(weighted, walk))
        .fold(f64::INFINITY, f64::min);
    let walks = all
        .into_iter()
        .filter(|walk| walk_weight(weighted, walk) == best)
        .collect();
    (best, walks)
}

/// Longest root-to-node walk length by exhaustive downward enumeration.
pub fn longest_depth(graph: &OntologyGraph, to: NodeId) -> usize {
    fn descend(graph: &OntologyGraph, here: NodeId, to: NodeId, len: usize, best: &mut usize) {
        if here == to {
            *best = (*best).max(len);
        }
        for &child in graph.children(here) {
            descend(graph, child, to, len + 1, best);
        }
    }
    let mut best = 0;
    descend(graph, graph.root(), to, 0, &mut best);
    best
}

/// Arc weight recomputed from first principles: depth by exhaustive walk
/// enumeration, sibling order by scanning the declared child list.
pub fn oracle_arc_weight(graph: &OntologyGraph, parent: NodeId, child: NodeId) -> f64 {
    let depth = longest_depth(graph, parent);
    let order = graph
        .children(parent)
        .iter()
        .position(|&c| c == child)
        .expect("oracle asked about a non-arc");
    1.0 / (depth as f64 + order as f64 / (graph.node_count() as f64 + 1.0) + 1.0)
}

/// Every admissible semantic distance between `a` and `b`: one candidate
/// per pair of cheapest walks, decomposed at their longest common suffix.
pub fn oracle_distances(weighted: &WeightedGraph, a: NodeId, b: NodeId) -> Vec<f64> {
    let (_, walks_a) = cheapest_walks(weighted, a);
    let (_, walks_b) = cheapest_walks(weighted, b);
    let mut candidates = Vec::new();
    for wa in &walks_a {
        for wb in &walks_b {
            let shared = longest_common_suffix(wa, wb);
            let below_a = &wa[..wa.len() - shared + 1];
            let below_b = &wb[..wb.len() - shared + 1];
            candidates.push(walk_weight(weighted, below_a) + walk_weight(weighted, below_b));
        }
    }
    candidates
}

fn longest_common_suffix(a: &[NodeId], b: &[NodeId]) -> usize {
    let mut shared = 0;
    while shared < a.len() && shared < b.len() && a[a.len() - 1 - shared] == b[b.len() - 1 - shared]
    {
        shared += 1;
    }
    shared
}

/// Random single-rooted DAG with up to `max_nodes` nodes: every non-root
/// node picks one to three parents among earlier nodes, so validation
/// always succeeds.
pub fn random_dag(rng: &mut impl Rng, max_nodes: usize) -> OntologyGraph {
    let count = rng.random_range(1..=max_nodes);
    let labels: Vec<String> = (0..count).map(|i| format!("n{i}")).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for child in 1..count {
        let parents = rng.random_range(1..=child.min(3));
        let mut pool: Vec<usize> = (0..child).collect();
        pool.shuffle(rng);
        for &parent in pool.iter().take(parents) {
            edges.push((parent, child));
        }
    }
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let edge_refs: Vec<(&str, &str)> = edges
        .iter()
        .map(|&(p, c)| (label_refs[p], label_refs[c]))
        .collect();
    OntologyGraph::new(label_refs[0], &label_refs, &edge_refs)
        .expect("generated ontologies are valid by construction")
}
