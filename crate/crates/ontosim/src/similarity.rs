//! Concept similarity.
//!
//! The semantic distance between two concepts is the weight of their
//! shortest root paths minus everything the paths share: both paths are cut
//! at the first common node (the deepest concept both walks pass through),
//! and the two dangling prefixes are summed. Similarity then squashes the
//! distance into (0, 1]:
//!
//! ```text
//! ssim(a, b) = 1 / (deg * sdis(a, b) + 1)
//! ```
//!
//! where `deg` in (0, 1] controls how hard distance drags similarity down.
//! Two shortcuts take precedence over the decomposition: identical concepts
//! are at distance 0, and directly connected concepts sit at exactly their
//! arc's weight.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::NodeId;
use crate::shortest_path::{concept_path, ConceptPath};
use crate::weight::WeightedGraph;

/// Default distance-impact factor.
pub const DEFAULT_DEG: f64 = 0.4;

/// Slack allowed between a direct arc and the decomposed distance before
/// the divergence is worth a warning.
const DIRECT_ARC_TOLERANCE: f64 = 1e-9;

/// A semantic distance, broken into the parts it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceDecomposition {
    pub path_a: ConceptPath,
    pub path_b: ConceptPath,
    /// First common node: the deepest node shared by both paths.
    pub fc: NodeId,
    /// Weight of the common segment from `fc` up to the root.
    pub cpath_weight: f64,
    /// Semantic distance: both path prefixes below `fc`, summed.
    pub sdis: f64,
}

/// Similarity verdict for a pair of concepts.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityResult {
    pub a: NodeId,
    pub b: NodeId,
    pub deg: f64,
    pub sdis: f64,
    pub ssim: f64,
    /// Path-level evidence; absent when the concepts are identical.
    pub decomposition: Option<DistanceDecomposition>,
    /// Set when a direct arc overrode a diverging decomposed distance.
    pub warning: Option<String>,
}

/// Deepest node two root paths share, with the weight of the shared tail.
///
/// Both paths must end at the same root; the shared tail is their longest
/// common suffix.
pub fn first_common_node(
    weighted: &WeightedGraph,
    a: &ConceptPath,
    b: &ConceptPath,
) -> Result<(NodeId, f64)> {
    if a.nodes.last() != b.nodes.last() {
        return Err(Error::DifferentRoots);
    }
    let mut shared = 1;
    while shared < a.nodes.len()
        && shared < b.nodes.len()
        && a.nodes[a.nodes.len() - 1 - shared] == b.nodes[b.nodes.len() - 1 - shared]
    {
        shared += 1;
    }
    let tail = &a.nodes[a.nodes.len() - shared..];
    Ok((tail[0], segment_weight(weighted, tail)?))
}

/// Sum of the arc weights along consecutive `nodes`, walked upward.
fn segment_weight(weighted: &WeightedGraph, nodes: &[NodeId]) -> Result<f64> {
    let mut total = 0.0;
    for step in nodes.windows(2) {
        total += weighted.weight(step[1], step[0])?;
    }
    Ok(total)
}

/// Semantic distance between two concepts, with the evidence.
pub fn semantic_distance(
    weighted: &WeightedGraph,
    a: NodeId,
    b: NodeId,
) -> Result<DistanceDecomposition> {
    check_node(weighted, a)?;
    check_node(weighted, b)?;
    let path_a = concept_path(weighted, a)?;
    let path_b = concept_path(weighted, b)?;
    decompose(weighted, path_a, path_b)
}

fn decompose(
    weighted: &WeightedGraph,
    path_a: ConceptPath,
    path_b: ConceptPath,
) -> Result<DistanceDecomposition> {
    let (fc, cpath_weight) = first_common_node(weighted, &path_a, &path_b)?;
    let below = |path: &ConceptPath| -> Result<f64> {
        let cut = path
            .nodes
            .iter()
            .position(|&n| n == fc)
            .expect("fc lies on both paths");
        segment_weight(weighted, &path.nodes[..=cut])
    };
    let sdis = below(&path_a)? + below(&path_b)?;
    Ok(DistanceDecomposition {
        path_a,
        path_b,
        fc,
        cpath_weight,
        sdis,
    })
}

/// Similarity between two concepts.
pub fn similarity(
    weighted: &WeightedGraph,
    a: NodeId,
    b: NodeId,
    deg: f64,
) -> Result<SimilarityResult> {
    check_deg(deg)?;
    check_node(weighted, a)?;
    check_node(weighted, b)?;
    let path_a = concept_path(weighted, a)?;
    let path_b = concept_path(weighted, b)?;
    let (sdis, decomposition, warning) = evaluate(weighted, a, b, &path_a, &path_b)?;
    Ok(SimilarityResult {
        a,
        b,
        deg,
        sdis,
        ssim: squash(sdis, deg),
        decomposition,
        warning,
    })
}

/// Pairwise similarity matrix over `nodes`, in their given order.
pub fn similarity_matrix(
    weighted: &WeightedGraph,
    nodes: &[NodeId],
    deg: f64,
) -> Result<Vec<Vec<f64>>> {
    check_deg(deg)?;
    let mut paths: HashMap<NodeId, ConceptPath> = HashMap::new();
    for &node in nodes {
        check_node(weighted, node)?;
        if let Entry::Vacant(slot) = paths.entry(node) {
            slot.insert(concept_path(weighted, node)?);
        }
    }
    let mut matrix = vec![vec![1.0; nodes.len()]; nodes.len()];
    for (i, &a) in nodes.iter().enumerate() {
        for (j, &b) in nodes.iter().enumerate().skip(i + 1) {
            let (sdis, _, _) = evaluate(weighted, a, b, &paths[&a], &paths[&b])?;
            let ssim = squash(sdis, deg);
            matrix[i][j] = ssim;
            matrix[j][i] = ssim;
        }
    }
    Ok(matrix)
}

/// Distance dispatch: identical pair, direct arc, or path decomposition.
fn evaluate(
    weighted: &WeightedGraph,
    a: NodeId,
    b: NodeId,
    path_a: &ConceptPath,
    path_b: &ConceptPath,
) -> Result<(f64, Option<DistanceDecomposition>, Option<String>)> {
    if a == b {
        return Ok((0.0, None, None));
    }
    let decomposition = decompose(weighted, path_a.clone(), path_b.clone())?;
    match direct_arc(weighted, a, b) {
        Some((parent, child, weight)) => {
            let warning = ((weight - decomposition.sdis).abs() > DIRECT_ARC_TOLERANCE)
                .then(|| {
                    format!(
                        "direct arc {} > {} weighs {:.3} but the decomposed distance is {:.3}; using the arc weight",
                        weighted.graph().label(parent),
                        weighted.graph().label(child),
                        weight,
                        decomposition.sdis,
                    )
                });
            Ok((weight, Some(decomposition), warning))
        }
        None => Ok((decomposition.sdis, Some(decomposition), None)),
    }
}

fn squash(sdis: f64, deg: f64) -> f64 {
    1.0 / (deg * sdis + 1.0)
}

/// The connecting arc when one concept is the other's direct parent.
fn direct_arc(weighted: &WeightedGraph, a: NodeId, b: NodeId) -> Option<(NodeId, NodeId, f64)> {
    debug_assert!(
        weighted.weight(a, b).is_err() || weighted.weight(b, a).is_err(),
        "a validated DAG cannot hold a two-cycle"
    );
    if let Ok(weight) = weighted.weight(a, b) {
        return Some((a, b, weight));
    }
    weighted.weight(b, a).ok().map(|weight| (b, a, weight))
}

fn check_deg(deg: f64) -> Result<()> {
    if deg > 0.0 && deg <= 1.0 {
        Ok(())
    } else {
        Err(Error::DegOutOfRange { deg })
    }
}

fn check_node(weighted: &WeightedGraph, id: NodeId) -> Result<()> {
    if id.index() < weighted.graph().node_count() {
        Ok(())
    } else {
        Err(Error::UnknownNode {
            label: format!("#{}", id.index()),
        })
    }
}
