//! Acceptance gate: the published reference results and the invariant
//! sweeps that release depends on. Each test prints one PASS/FAIL line
//! (visible with `--nocapture`) and fails loudly on any deviation.

mod common;

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::Command;

use ontosim::{
    annotate_weights, concept_path, fixtures, load_graph, semantic_distance, similarity, NodeId,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FIG2: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig2.onto");
const FIG6: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig6.onto");
const TABLE4: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/table4.csv");
const TABLE5: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/table5.csv");

/// Values the crate must reproduce within ±0.0005.
const CELL_TOLERANCE: f64 = 0.0005;

fn check(name: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("{name}: PASS"),
        Err(cause) => {
            println!("{name}: FAIL");
            resume_unwind(cause);
        }
    }
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_ontosim"))
        .args(args)
        .output()
        .expect("the binary is built alongside the tests");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

/// Data rows of the named table in a rendered trace.
fn table_rows<'t>(stdout: &'t str, title: &str) -> Vec<&'t str> {
    stdout
        .lines()
        .skip_while(|line| *line != title)
        .skip(2)
        .take_while(|line| !line.is_empty())
        .collect()
}

#[test]
fn acceptance_trace_weight_rows() {
    check("trace weight rows", || {
        let (code, stdout, _) = run_cli(&["path", FIG2, "--node", "H", "--trace"]);
        assert_eq!(code, 0);
        let rows = table_rows(&stdout, "weights");
        assert_eq!(
            rows.len(),
            7,
            "the search must stop after seven steps:\n{stdout}"
        );
        for row in &rows {
            assert_eq!(row.split_whitespace().count(), 10, "bad row: {row}");
        }
        let last: Vec<&str> = rows.last().unwrap().split_whitespace().collect();
        // Columns in load order: A FC B C D E F G H.
        let expected = [
            Some(1.768),
            Some(0.768),
            None,
            Some(0.533),
            Some(0.783),
            Some(0.333),
            Some(0.450),
            Some(0.200),
            Some(0.000),
        ];
        for (cell, want) in last[1..].iter().zip(expected) {
            match want {
                Some(value) => {
                    let got: f64 = cell.parse().expect("numeric cell");
                    assert!((got - value).abs() <= CELL_TOLERANCE, "{got} != {value}");
                }
                None => assert_eq!(*cell, "∞"),
            }
        }
    });
}

#[test]
fn acceptance_trace_predecessors_and_path() {
    check("trace predecessors and path", || {
        let (code, stdout, _) = run_cli(&["path", FIG2, "--node", "H", "--trace"]);
        assert_eq!(code, 0);
        assert_eq!(stdout.lines().next(), Some("H > E > FC > A (1.768)"));
        let rows = table_rows(&stdout, "predecessors");
        assert_eq!(rows.len(), 7, "{stdout}");
        let last: Vec<&str> = rows.last().unwrap().split_whitespace().collect();
        assert_eq!(last, ["W6", "FC", "E", "∅", "G", "F", "H", "G", "H", "∅"]);
    });
}

#[test]
fn acceptance_vehicle_similarity_matrix() {
    check("vehicle similarity matrix", || {
        let (code, stdout, _) = run_cli(&[
            "matrix",
            FIG6,
            "--nodes",
            "Vehicle,Truck,Car,FamilyCar,SportCar",
            "--deg",
            "0.4",
        ]);
        assert_eq!(code, 0);
        let expected = [
            [1.0, 0.758, 0.738, 0.643, 0.652],
            [0.758, 1.0, 0.597, 0.533, 0.54],
            [0.738, 0.597, 1.0, 0.833, 0.849],
            [0.643, 0.533, 0.833, 1.0, 0.726],
            [0.652, 0.54, 0.849, 0.726, 1.0],
        ];
        let lines: Vec<&str> = stdout.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], ",Vehicle,Truck,Car,FamilyCar,SportCar");
        for (row, want) in lines[1..].iter().zip(expected) {
            let cells: Vec<&str> = row.split(',').collect();
            assert_eq!(cells.len(), 6);
            for (cell, value) in cells[1..].iter().zip(want) {
                let got: f64 = cell.parse().expect("numeric cell");
                assert!(
                    (got - value).abs() <= CELL_TOLERANCE,
                    "{got} != {value} in {row}"
                );
            }
        }
    });
}

#[test]
fn acceptance_arc_weights_match_enumeration_oracle() {
    check("arc weights against enumeration oracle", || {
        let graph = load_graph(fixtures::FIG2).unwrap();
        let weighted = annotate_weights(graph.clone());
        assert_eq!(weighted.arcs().len(), 10);
        for arc in weighted.arcs() {
            let oracle = common::oracle_arc_weight(&graph, arc.parent, arc.child);
            assert_eq!(
                arc.weight,
                oracle,
                "{} -> {}",
                graph.label(arc.parent),
                graph.label(arc.child)
            );
        }
        let frozen = [
            ("A", "FC", 1.0),
            ("FC", "B", 1.0 / 2.0),
            ("FC", "C", 10.0 / 21.0),
            ("FC", "D", 5.0 / 11.0),
            ("FC", "E", 10.0 / 23.0),
            ("D", "F", 1.0 / 3.0),
            ("C", "G", 1.0 / 3.0),
            ("F", "G", 1.0 / 4.0),
            ("E", "H", 1.0 / 3.0),
            ("G", "H", 1.0 / 5.0),
        ];
        for (parent, child, value) in frozen {
            let weight = weighted
                .weight(graph.node(parent).unwrap(), graph.node(child).unwrap())
                .unwrap();
            assert!(
                (weight - value).abs() <= 1e-15,
                "{parent} -> {child}: {weight}"
            );
        }
    });
}

#[test]
fn acceptance_random_ontology_invariants() {
    check("random ontology invariants", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for round in 0..250 {
            let graph = common::random_dag(&mut rng, 10);
            let weighted = annotate_weights(graph.clone());
            let ids: Vec<NodeId> = graph.ids().collect();

            // Search results equal exhaustive enumeration, node by node.
            for &node in &ids {
                let path = concept_path(&weighted, node).unwrap();
                let (best, walks) = common::cheapest_walks(&weighted, node);
                assert_eq!(path.total_weight, best, "round {round}");
                assert!(walks.contains(&path.nodes), "round {round}");
                if walks.len() == 1 {
                    assert_eq!(path.nodes, walks[0], "round {round}");
                }
            }

            // Arc weights strictly descend along every downward walk.
            let mut stack: Vec<(NodeId, Option<f64>)> = vec![(graph.root(), None)];
            while let Some((node, above)) = stack.pop() {
                for &child in graph.children(node) {
                    let weight = weighted.weight(node, child).unwrap();
                    if let Some(above) = above {
                        assert!(weight < above, "round {round}");
                    }
                    stack.push((child, Some(weight)));
                }
            }

            // Similarity is symmetric, 1 on the diagonal, and in (0, 1].
            let all: Vec<Vec<_>> = ids
                .iter()
                .map(|&a| {
                    ids.iter()
                        .map(|&b| similarity(&weighted, a, b, 0.4).unwrap())
                        .collect()
                })
                .collect();
            for (i, row) in all.iter().enumerate() {
                assert_eq!(row[i].ssim, 1.0, "round {round}");
                for (j, result) in row.iter().enumerate() {
                    assert_eq!(result.ssim, all[j][i].ssim, "round {round}");
                    assert!(result.ssim > 0.0 && result.ssim <= 1.0, "round {round}");
                }
            }

            // Larger distance never yields larger similarity.
            for row in &all {
                for near in row {
                    for far in row {
                        if far.sdis > near.sdis + 1e-12 {
                            assert!(
                                far.ssim <= near.ssim,
                                "round {round}: sdis {} vs {} but ssim {} vs {}",
                                far.sdis,
                                near.sdis,
                                far.ssim,
                                near.ssim
                            );
                        }
                    }
                }
            }

            // Decomposed distances equal a brute-force decomposition of
            // some pair of cheapest walks.
            for (i, &a) in ids.iter().enumerate() {
                for &b in &ids[i..] {
                    let sdis = semantic_distance(&weighted, a, b).unwrap().sdis;
                    let candidates = common::oracle_distances(&weighted, a, b);
                    assert!(
                        candidates.iter().any(|c| (c - sdis).abs() <= 1e-9),
                        "round {round}: {sdis} not among {candidates:?}"
                    );
                }
            }
        }
    });
}

#[test]
fn acceptance_baseline_comparison_deltas() {
    check("baseline comparison deltas", || {
        let (code, stdout, _) = run_cli(&["compare", FIG6, TABLE5, "--deg", "0.4"]);
        assert_eq!(code, 0);
        assert_eq!(
            stdout.lines().count(),
            26,
            "25 cells plus the summary:\n{stdout}"
        );
        let summary = stdout.lines().last().unwrap();
        let max: f64 = summary
            .strip_prefix("max |delta| = ")
            .and_then(|rest| rest.split_whitespace().next())
            .expect("summary line")
            .parse()
            .expect("numeric max");
        assert!(max <= CELL_TOLERANCE, "{summary}");

        let (code, stdout, _) = run_cli(&["compare", FIG6, TABLE4, "--deg", "0.4"]);
        assert_eq!(code, 0);
        let cell = stdout
            .lines()
            .find(|line| line.starts_with("Car FamilyCar "))
            .expect("Car/FamilyCar cell");
        let delta: f64 = cell
            .split_whitespace()
            .find_map(|token| token.strip_prefix("delta="))
            .expect("delta field")
            .parse()
            .expect("numeric delta");
        assert!((delta - 0.073).abs() <= CELL_TOLERANCE, "{cell}");
    });
}
