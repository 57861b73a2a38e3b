//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while loading an ontology or querying it.
#[derive(Debug, Error)]
pub enum Error {
    /// A line of the ontology text could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The document never declared a root.
    #[error("missing `root:` declaration")]
    NoRoot,

    /// The declared root shows up as somebody's child.
    #[error("declared root `{label}` has a parent")]
    RootHasParent { label: String },

    /// A node other than the declared root has no parent.
    #[error("node `{label}` has no parent but is not the declared root")]
    MultipleRoots { label: String },

    /// The is-a relation loops back on itself.
    #[error("cycle detected involving `{label}`")]
    CycleDetected { label: String },

    /// A node cannot be reached from the root by child edges.
    #[error("node `{label}` is not reachable from the root")]
    UnreachableNode { label: String },

    /// The same parent-child edge was declared twice.
    #[error("duplicate edge `{parent}` -> `{child}`")]
    DuplicateEdge { parent: String, child: String },

    /// An edge references a label missing from the node list.
    #[error("edge references undeclared node `{label}`")]
    UnknownNodeInEdge { label: String },

    /// A label is empty or contains whitespace.
    #[error("invalid node label `{label}`")]
    InvalidLabel { label: String },

    /// The same label was declared twice in the node list.
    #[error("duplicate node `{label}`")]
    DuplicateNode { label: String },

    /// A lookup used a label or id the graph does not contain.
    #[error("unknown node `{label}`")]
    UnknownNode { label: String },

    /// A weight was requested for a pair that is not an arc.
    #[error("no arc `{parent}` -> `{child}`")]
    NotAnArc { parent: String, child: String },

    /// Two paths were combined that do not end at the same root.
    #[error("paths reach different roots")]
    DifferentRoots,

    /// The distance-impact factor is outside (0, 1].
    #[error("deg must be in (0, 1], got {deg}")]
    DegOutOfRange { deg: f64 },

    /// A baseline similarity table could not be parsed.
    #[error("baseline table: {message}")]
    Baseline { message: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
