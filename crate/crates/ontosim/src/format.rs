//! Text formats: the ontology document, baseline CSV tables, display
//! rounding, and the trace renderer.
//!
//! An ontology document is line-oriented: a `root: <label>` declaration
//! first, then one `<parent> <child>` arc per line. Blank lines and lines
//! starting with `#` are skipped. Node identity is the label; load order is
//! the root followed by labels in order of first appearance.
//!
//! A baseline table is a square CSV with an empty corner cell, one label
//! column, and identical labels across header and rows.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::OntologyGraph;
use crate::shortest_path::DijkstraTrace;

/// Parsed text form of an ontology: root declaration plus arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyDocument {
    pub root: String,
    pub edges: Vec<(String, String)>,
}

impl OntologyDocument {
    /// Parses the line-oriented ontology format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut root: Option<String> = None;
        let mut edges = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let number = index + 1;
            if let Some(rest) = line.strip_prefix("root:") {
                if root.is_some() {
                    return Err(Error::Parse {
                        line: number,
                        message: "second root declaration".to_string(),
                    });
                }
                let mut tokens = rest.split_whitespace();
                root = match (tokens.next(), tokens.next()) {
                    (Some(label), None) => Some(label.to_string()),
                    (None, _) => {
                        return Err(Error::Parse {
                            line: number,
                            message: "missing root label".to_string(),
                        })
                    }
                    _ => {
                        return Err(Error::Parse {
                            line: number,
                            message: "expected a single root label".to_string(),
                        })
                    }
                };
            } else {
                if root.is_none() {
                    return Err(Error::NoRoot);
                }
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: number,
                        message: format!("expected `parent child`, found {} tokens", tokens.len()),
                    });
                }
                edges.push((tokens[0].to_string(), tokens[1].to_string()));
            }
        }
        let root = root.ok_or(Error::NoRoot)?;
        Ok(OntologyDocument { root, edges })
    }

    /// Builds the validated graph, deriving load order from the text.
    pub fn build(&self) -> Result<OntologyGraph> {
        let mut order: Vec<&str> = vec![self.root.as_str()];
        let mut seen: HashSet<&str> = order.iter().copied().collect();
        for (parent, child) in &self.edges {
            for label in [parent.as_str(), child.as_str()] {
                if seen.insert(label) {
                    order.push(label);
                }
            }
        }
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|(p, c)| (p.as_str(), c.as_str()))
            .collect();
        OntologyGraph::new(&self.root, &order, &edges)
    }
}

/// Parses and validates an ontology document in one step.
pub fn load_graph(text: &str) -> Result<OntologyGraph> {
    OntologyDocument::parse(text)?.build()
}

/// A published similarity matrix to compare against.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineTable {
    pub labels: Vec<String>,
    /// Row-major values, one row per label.
    pub values: Vec<Vec<f64>>,
}

impl BaselineTable {
    /// Parses the square CSV form.
    pub fn parse(text: &str) -> Result<Self> {
        let fail = |message: String| Error::Baseline { message };
        let mut lines = text.lines().filter(|line| !line.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| fail("empty table".to_string()))?;
        let mut cells = header.split(',').map(str::trim);
        let corner = cells.next().unwrap_or_default();
        if !corner.is_empty() {
            return Err(fail(format!(
                "expected an empty corner cell, found `{corner}`"
            )));
        }
        let labels: Vec<String> = cells.map(str::to_string).collect();
        if labels.is_empty() {
            return Err(fail("header declares no labels".to_string()));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() {
                return Err(fail("empty label in header".to_string()));
            }
            if !seen.insert(label) {
                return Err(fail(format!("duplicate label `{label}`")));
            }
        }

        let mut values = Vec::with_capacity(labels.len());
        for line in lines {
            if values.len() == labels.len() {
                return Err(fail(format!("more than {} rows", labels.len())));
            }
            let mut cells = line.split(',').map(str::trim);
            let row_label = cells.next().unwrap_or_default();
            let expected = &labels[values.len()];
            if row_label != expected {
                return Err(fail(format!(
                    "row {} is labeled `{row_label}`, expected `{expected}`",
                    values.len() + 1
                )));
            }
            let mut row = Vec::with_capacity(labels.len());
            for cell in cells {
                let value: f64 = cell
                    .parse()
                    .ok()
                    .filter(|v: &f64| v.is_finite())
                    .ok_or_else(|| fail(format!("bad value `{cell}` in row `{row_label}`")))?;
                row.push(value);
            }
            if row.len() != labels.len() {
                return Err(fail(format!(
                    "row `{row_label}` holds {} values, expected {}",
                    row.len(),
                    labels.len()
                )));
            }
            values.push(row);
        }
        if values.len() != labels.len() {
            return Err(fail(format!(
                "{} rows for {} labels",
                values.len(),
                labels.len()
            )));
        }
        Ok(BaselineTable { labels, values })
    }
}

/// Rounds half away from zero at `precision` decimals; never returns -0.
pub fn round_to(value: f64, precision: usize) -> f64 {
    let factor = 10f64.powi(precision as i32);
    let rounded = (value * factor).round() / factor;
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Renders a value rounded half away from zero at `precision` decimals.
pub fn format_value(value: f64, precision: usize) -> String {
    format!("{:.*}", precision, round_to(value, precision))
}

/// Renders a search trace as two aligned tables: tentative weights per
/// step, then predecessors per step. Columns follow load order; `∞` marks
/// a still-infinite weight and `∅` a missing predecessor.
pub fn render_trace(graph: &OntologyGraph, trace: &DijkstraTrace) -> String {
    let columns: Vec<&str> = graph.ids().map(|id| graph.label(id)).collect();
    let steps: Vec<String> = (0..trace.rows.len()).map(|i| format!("W{i}")).collect();
    let weights: Vec<Vec<String>> = trace
        .rows
        .iter()
        .map(|row| {
            row.weights
                .iter()
                .map(|w| w.map_or("∞".to_string(), |w| format_value(w, 3)))
                .collect()
        })
        .collect();
    let preds: Vec<Vec<String>> = trace
        .rows
        .iter()
        .map(|row| {
            row.preds
                .iter()
                .map(|p| p.map_or("∅".to_string(), |p| graph.label(p).to_string()))
                .collect()
        })
        .collect();
    format!(
        "{}\n{}",
        table("weights", &steps, &columns, &weights),
        table("predecessors", &steps, &columns, &preds)
    )
}

fn table(title: &str, steps: &[String], columns: &[&str], cells: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let step_width = steps.iter().map(|s| width(s)).max().unwrap_or(0);
    let column_widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, head)| {
            cells
                .iter()
                .map(|row| width(&row[i]))
                .chain([width(head)])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(width(s))));

    let mut out = String::new();
    out.push_str(title);
    out.push('\n');
    out.push_str(&" ".repeat(step_width));
    for (head, w) in columns.iter().zip(&column_widths) {
        out.push_str("  ");
        out.push_str(&pad(head, *w));
    }
    out.push('\n');
    for (step, row) in steps.iter().zip(cells) {
        out.push_str(&format!("{step:<step_width$}"));
        for (cell, w) in row.iter().zip(&column_widths) {
            out.push_str("  ");
            out.push_str(&pad(cell, *w));
        }
        out.push('\n');
    }
    out
}
