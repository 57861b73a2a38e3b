//! Command-line front end for the similarity library.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ontosim::{
    annotate_weights, format_value, load_graph, render_trace, round_to, shortest_path_to_root,
    similarity, similarity_matrix, BaselineTable, Error, NodeId, WeightedGraph, DEFAULT_DEG,
};

#[derive(Parser)]
#[command(
    name = "ontosim",
    version,
    about = "Semantic similarity over is-a ontologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every arc with its weight, in declaration order.
    Weights {
        /// Ontology file.
        file: PathBuf,
        /// Decimal places to print.
        #[arg(long, default_value_t = 3)]
        precision: usize,
    },
    /// Print the cheapest path from a node up to the root.
    Path {
        /// Ontology file.
        file: PathBuf,
        /// Start node.
        #[arg(long)]
        node: String,
        /// Also print the step-by-step search tables.
        #[arg(long)]
        trace: bool,
    },
    /// Print the similarity of two nodes.
    Sim {
        /// Ontology file.
        file: PathBuf,
        /// First node.
        #[arg(long)]
        a: String,
        /// Second node.
        #[arg(long)]
        b: String,
        /// Distance-impact factor in (0, 1].
        #[arg(long, default_value_t = DEFAULT_DEG)]
        deg: f64,
        /// Show the distance and its decomposition alongside.
        #[arg(long)]
        explain: bool,
    },
    /// Print a pairwise similarity matrix.
    Matrix {
        /// Ontology file.
        file: PathBuf,
        /// Comma-separated node labels; all nodes when omitted.
        #[arg(long, value_delimiter = ',')]
        nodes: Option<Vec<String>>,
        /// Distance-impact factor in (0, 1].
        #[arg(long, default_value_t = DEFAULT_DEG)]
        deg: f64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Compare computed similarities against a baseline CSV table.
    Compare {
        /// Ontology file.
        file: PathBuf,
        /// Baseline similarity table; its labels pick the nodes.
        baseline: PathBuf,
        /// Distance-impact factor in (0, 1].
        #[arg(long, default_value_t = DEFAULT_DEG)]
        deg: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

/// A failure with the exit code it deserves: 2 for bad input, 1 for
/// breakage on our side.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            code: 2,
            message: error.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(error) = stdout
                .write_all(output.as_bytes())
                .and_then(|()| stdout.flush())
            {
                eprintln!("error: failed to write output: {error}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Weights { file, precision } => weights(&file, precision),
        Command::Path { file, node, trace } => path(&file, &node, trace),
        Command::Sim {
            file,
            a,
            b,
            deg,
            explain,
        } => sim(&file, &a, &b, deg, explain),
        Command::Matrix {
            file,
            nodes,
            deg,
            format,
        } => matrix(&file, nodes.as_deref(), deg, format),
        Command::Compare {
            file,
            baseline,
            deg,
        } => compare(&file, &baseline, deg),
    }
}

fn load(file: &Path) -> Result<WeightedGraph, Failure> {
    let text = read(file)?;
    Ok(annotate_weights(load_graph(&text)?))
}

fn read(file: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(file).map_err(|error| Failure {
        code: 2,
        message: format!("{}: {error}", file.display()),
    })
}

fn weights(file: &Path, precision: usize) -> Result<String, Failure> {
    let weighted = load(file)?;
    let graph = weighted.graph();
    let mut out = String::new();
    for arc in weighted.arcs() {
        let _ = writeln!(
            out,
            "{} {} {}",
            graph.label(arc.parent),
            graph.label(arc.child),
            format_value(arc.weight, precision)
        );
    }
    Ok(out)
}

fn path(file: &Path, node: &str, trace: bool) -> Result<String, Failure> {
    let weighted = load(file)?;
    let graph = weighted.graph();
    let start = graph.node(node)?;
    let (path, steps) = shortest_path_to_root(&weighted, start)?;
    let walk: Vec<&str> = path.nodes.iter().map(|&n| graph.label(n)).collect();
    let mut out = format!(
        "{} ({})\n",
        walk.join(" > "),
        format_value(path.total_weight, 3)
    );
    if trace {
        out.push('\n');
        out.push_str(&render_trace(graph, &steps));
    }
    Ok(out)
}

fn sim(file: &Path, a: &str, b: &str, deg: f64, explain: bool) -> Result<String, Failure> {
    let weighted = load(file)?;
    let graph = weighted.graph();
    let result = similarity(&weighted, graph.node(a)?, graph.node(b)?, deg)?;
    if let Some(warning) = &result.warning {
        eprintln!("warning: {warning}");
    }
    if !explain {
        return Ok(format!("{}\n", format_value(result.ssim, 3)));
    }
    let mut line = format!(
        "ssim={} sdis={}",
        format_value(result.ssim, 3),
        format_value(result.sdis, 3)
    );
    if let Some(parts) = &result.decomposition {
        let _ = write!(
            line,
            " fc={} cpath={}",
            graph.label(parts.fc),
            format_value(parts.cpath_weight, 3)
        );
    }
    line.push('\n');
    Ok(line)
}

fn resolve_nodes(
    weighted: &WeightedGraph,
    labels: Option<&[String]>,
) -> Result<(Vec<String>, Vec<NodeId>), Failure> {
    let graph = weighted.graph();
    match labels {
        Some(labels) => {
            let ids = labels
                .iter()
                .map(|label| graph.node(label))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((labels.to_vec(), ids))
        }
        None => {
            let ids: Vec<NodeId> = graph.ids().collect();
            let labels = ids.iter().map(|&id| graph.label(id).to_string()).collect();
            Ok((labels, ids))
        }
    }
}

fn matrix(
    file: &Path,
    nodes: Option<&[String]>,
    deg: f64,
    format: MatrixFormat,
) -> Result<String, Failure> {
    let weighted = load(file)?;
    let (labels, ids) = resolve_nodes(&weighted, nodes)?;
    let cells = similarity_matrix(&weighted, &ids, deg)?;
    match format {
        MatrixFormat::Csv => {
            let mut out = format!(",{}\n", labels.join(","));
            for (label, row) in labels.iter().zip(&cells) {
                let rendered: Vec<String> = row.iter().map(|&v| format_value(v, 3)).collect();
                let _ = writeln!(out, "{label},{}", rendered.join(","));
            }
            Ok(out)
        }
        MatrixFormat::Json => {
            let rounded: Vec<Vec<f64>> = cells
                .iter()
                .map(|row| row.iter().map(|&v| round_to(v, 3)).collect())
                .collect();
            let payload = serde_json::json!({
                "deg": deg,
                "nodes": labels,
                "matrix": rounded,
            });
            Ok(format!("{payload}\n"))
        }
    }
}

fn compare(file: &Path, baseline: &Path, deg: f64) -> Result<String, Failure> {
    let weighted = load(file)?;
    let table = BaselineTable::parse(&read(baseline)?)?;
    let graph = weighted.graph();
    let ids = table
        .labels
        .iter()
        .map(|label| graph.node(label))
        .collect::<Result<Vec<_>, _>>()?;
    let cells = similarity_matrix(&weighted, &ids, deg)?;

    let mut out = String::new();
    let mut worst: (f64, usize, usize) = (-1.0, 0, 0);
    for (i, row_label) in table.labels.iter().enumerate() {
        for (j, column_label) in table.labels.iter().enumerate() {
            let ours = round_to(cells[i][j], 3);
            let delta = ours - table.values[i][j];
            if delta.abs() > worst.0 {
                worst = (delta.abs(), i, j);
            }
            let _ = writeln!(
                out,
                "{row_label} {column_label} ours={} baseline={} delta={}",
                format_value(ours, 3),
                format_value(table.values[i][j], 3),
                format_value(delta, 3)
            );
        }
    }
    let _ = writeln!(
        out,
        "max |delta| = {} at {} {}",
        format_value(worst.0, 3),
        table.labels[worst.1],
        table.labels[worst.2]
    );
    Ok(out)
}
