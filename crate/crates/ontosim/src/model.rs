//! Ontology graph model: a single-rooted DAG of is-a relations.
//!
//! Nodes are identified by load order ([`NodeId`] wraps the position), and
//! every structural query the weighting formula depends on lives here:
//! declaration-order children, per-parent sibling order, and max depth
//! (the longest root-to-node path).

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Stable handle for a node; ordering follows load order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub(crate) usize);

impl NodeId {
    /// Position of the node in load order.
    pub fn index(self) -> usize {
        self.0
    }
}

/// Per-node facts consumed by the weighting formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeMeta {
    pub id: NodeId,
    /// Number of arcs on the longest path from the root to this node.
    pub max_depth: usize,
}

/// A validated single-rooted DAG of `parent -> child` is-a arcs.
#[derive(Debug, Clone)]
pub struct OntologyGraph {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    root: NodeId,
    edges: Vec<(NodeId, NodeId)>,
    children: Vec<Vec<NodeId>>,
    parents: Vec<Vec<NodeId>>,
}

impl OntologyGraph {
    /// Builds and validates a graph from explicit node and edge lists.
    ///
    /// Node order fixes the `NodeId` assignment; edge order fixes each
    /// parent's child order (and with it the sibling order used by the
    /// weighting formula). Rejects malformed labels, duplicate
    /// declarations, cycles, stray roots, and unreachable nodes.
    pub fn new(root: &str, nodes: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let mut labels = Vec::with_capacity(nodes.len());
        let mut index = HashMap::with_capacity(nodes.len());
        for &label in nodes {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel {
                    label: label.to_string(),
                });
            }
            if index
                .insert(label.to_string(), NodeId(labels.len()))
                .is_some()
            {
                return Err(Error::DuplicateNode {
                    label: label.to_string(),
                });
            }
            labels.push(label.to_string());
        }

        let root = *index.get(root).ok_or_else(|| Error::UnknownNode {
            label: root.to_string(),
        })?;

        let mut edge_ids = Vec::with_capacity(edges.len());
        let mut children = vec![Vec::new(); labels.len()];
        let mut parents = vec![Vec::new(); labels.len()];
        for &(parent, child) in edges {
            let lookup = |label: &str| {
                index
                    .get(label)
                    .copied()
                    .ok_or_else(|| Error::UnknownNodeInEdge {
                        label: label.to_string(),
                    })
            };
            let p = lookup(parent)?;
            let c = lookup(child)?;
            if edge_ids.contains(&(p, c)) {
                return Err(Error::DuplicateEdge {
                    parent: parent.to_string(),
                    child: child.to_string(),
                });
            }
            edge_ids.push((p, c));
            children[p.0].push(c);
            parents[c.0].push(p);
        }

        let graph = OntologyGraph {
            labels,
            index,
            root,
            edges: edge_ids,
            children,
            parents,
        };
        graph.validate()?;
        Ok(graph)
    }

    fn validate(&self) -> Result<()> {
        let drained = self.topological_prefix();
        if drained.len() != self.labels.len() {
            let stuck = self
                .ids()
                .find(|id| !drained.contains(id))
                .expect("a cyclic graph has a node that never drains");
            return Err(Error::CycleDetected {
                label: self.labels[stuck.0].clone(),
            });
        }
        if !self.parents[self.root.0].is_empty() {
            return Err(Error::RootHasParent {
                label: self.labels[self.root.0].clone(),
            });
        }
        if let Some(stray) = self
            .ids()
            .find(|id| *id != self.root && self.parents[id.0].is_empty())
        {
            return Err(Error::MultipleRoots {
                label: self.labels[stray.0].clone(),
            });
        }
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![self.root];
        seen[self.root.0] = true;
        while let Some(node) = stack.pop() {
            for &child in &self.children[node.0] {
                if !seen[child.0] {
                    seen[child.0] = true;
                    stack.push(child);
                }
            }
        }
        if let Some(orphan) = self.ids().find(|id| !seen[id.0]) {
            return Err(Error::UnreachableNode {
                label: self.labels[orphan.0].clone(),
            });
        }
        Ok(())
    }

    /// Kahn's algorithm; `None` when a cycle blocks a full ordering.
    fn topological_order(&self) -> Option<Vec<NodeId>> {
        let order = self.topological_prefix();
        (order.len() == self.labels.len()).then_some(order)
    }

    /// Longest cycle-free prefix Kahn's algorithm can produce.
    fn topological_prefix(&self) -> Vec<NodeId> {
        let mut indegree: Vec<usize> = self.parents.iter().map(Vec::len).collect();
        let mut queue: Vec<NodeId> = self.ids().filter(|id| indegree[id.0] == 0).collect();
        let mut order = Vec::with_capacity(self.labels.len());
        while let Some(node) = queue.pop() {
            order.push(node);
            for &child in &self.children[node.0] {
                indegree[child.0] -= 1;
                if indegree[child.0] == 0 {
                    queue.push(child);
                }
            }
        }
        order
    }

    /// All node ids in load order.
    pub fn ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Label of a node.
    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id.0]
    }

    /// Looks a node up by label.
    pub fn node(&self, label: &str) -> Result<NodeId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownNode {
                label: label.to_string(),
            })
    }

    /// Children of `id` in declaration order.
    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.children[id.0]
    }

    /// Parents of `id` in declaration order.
    pub fn parents(&self, id: NodeId) -> &[NodeId] {
        &self.parents[id.0]
    }

    /// All arcs in declaration order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Zero-based position of `child` among `parent`'s declared children.
    pub fn sibling_order(&self, parent: NodeId, child: NodeId) -> Result<usize> {
        self.children[parent.0]
            .iter()
            .position(|&c| c == child)
            .ok_or_else(|| Error::NotAnArc {
                parent: self.labels[parent.0].clone(),
                child: self.labels[child.0].clone(),
            })
    }

    /// Longest-path depth of every node, in load order.
    ///
    /// The depth of the root is 0 and each arc extends its parent's depth
    /// by one; with multiple parents the deepest one wins.
    pub fn max_depths(&self) -> Vec<NodeMeta> {
        let order = self
            .topological_order()
            .expect("validated graphs are acyclic");
        let mut depth = vec![0usize; self.labels.len()];
        for node in order {
            for &child in &self.children[node.0] {
                depth[child.0] = depth[child.0].max(depth[node.0] + 1);
            }
        }
        self.ids()
            .map(|id| NodeMeta {
                id,
                max_depth: depth[id.0],
            })
            .collect()
    }
}
