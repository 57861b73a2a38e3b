//! Semantic similarity between concepts of a single-rooted is-a ontology.
//!
//! The ontology is a DAG of `parent -> child` specialization arcs. Every
//! arc gets a weight from the parent's depth, the child's position among
//! its siblings, and the ontology size; the semantic distance between two
//! concepts is then read off their cheapest paths to the root, cut at the
//! deepest node both paths share; and similarity squashes that distance
//! into (0, 1].
//!
//! ```
//! use ontosim::{annotate_weights, load_graph, similarity, DEFAULT_DEG};
//!
//! let weighted = annotate_weights(load_graph(ontosim::fixtures::FIG2)?);
//! let graph = weighted.graph();
//! let result = similarity(
//!     &weighted,
//!     graph.node("H")?,
//!     graph.node("B")?,
//!     DEFAULT_DEG,
//! )?;
//! assert!((result.ssim - 0.663).abs() < 0.0005);
//! # Ok::<(), ontosim::Error>(())
//! ```

pub mod error;
pub mod format;
pub mod model;
pub mod shortest_path;
pub mod similarity;
pub mod weight;

/// Bundled sample ontologies and published baseline tables, as shipped
/// under `fixtures/`.
pub mod fixtures {
    /// Nine-concept sample ontology.
    pub const FIG2: &str = include_str!("../fixtures/fig2.onto");
    /// Vehicle sample ontology.
    pub const FIG6: &str = include_str!("../fixtures/fig6.onto");
    /// Published vehicle similarities: node-counting baseline.
    pub const TABLE3: &str = include_str!("../fixtures/table3.csv");
    /// Published vehicle similarities: edge-counting baseline.
    pub const TABLE4: &str = include_str!("../fixtures/table4.csv");
    /// Published vehicle similarities: this crate's method.
    pub const TABLE5: &str = include_str!("../fixtures/table5.csv");
}

pub use error::{Error, Result};
pub use format::{
    format_value, load_graph, render_trace, round_to, BaselineTable, OntologyDocument,
};
pub use model::{NodeId, NodeMeta, OntologyGraph};
pub use shortest_path::{
    concept_path, shortest_path_to_root, ConceptPath, DijkstraTrace, TraceRow,
};
pub use similarity::{
    first_common_node, semantic_distance, similarity, similarity_matrix, DistanceDecomposition,
    SimilarityResult, DEFAULT_DEG,
};
pub use weight::{annotate_weights, arc_weight, WeightedArc, WeightedGraph};
