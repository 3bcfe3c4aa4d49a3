//! End-to-end tests of the `conflict` binary: exit codes, file round trips,
//! and benchmark determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_conflict"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("conflict-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary should run")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let out = run(bin().args(["gen"]).args(args).args(["--out", path.to_str().unwrap()]));
    assert_eq!(code(&out), 0, "gen failed: {}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn solve_exact_exit_codes() {
    let dir = scratch("solve-exact");
    let unsat = gen(&dir, "two_vertex_k2.json", &["--family", "two-vertex", "--k", "2"]);
    let out = run(bin().args(["solve", unsat.to_str().unwrap(), "--solver", "exact"]));
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("unsatisfiable"));

    let sat = gen(&dir, "p3_k2.json", &["--family", "planar", "--n", "3", "--k", "4"]);
    let out = run(bin().args(["solve", sat.to_str().unwrap(), "--solver", "orient"]));
    assert_eq!(code(&out), 0);
}

#[test]
fn malformed_file_is_usage_error() {
    let dir = scratch("malformed");
    let path = dir.join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(bin().args(["solve", path.to_str().unwrap(), "--solver", "exact"]));
    assert_eq!(code(&out), 2);
}

#[test]
fn randomized_solver_requires_seed() {
    let dir = scratch("seed-required");
    let file = gen(&dir, "t.json", &["--family", "two-vertex", "--k", "2"]);
    let out = run(bin().args(["solve", file.to_str().unwrap(), "--solver", "lll"]));
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn emitted_colouring_verifies() {
    let dir = scratch("verify-roundtrip");
    let file = gen(
        &dir,
        "planar.json",
        &["--family", "planar", "--n", "30", "--k", "4", "--seed", "5"],
    );
    let colouring = dir.join("colouring.json");
    let out = run(bin().args([
        "solve",
        file.to_str().unwrap(),
        "--solver",
        "orient",
        "--out",
        colouring.to_str().unwrap(),
    ]));
    assert_eq!(code(&out), 0);
    let out =
        run(bin().args(["verify", file.to_str().unwrap(), colouring.to_str().unwrap()]));
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("valid"));
}

#[test]
fn verify_reports_conflicts_and_errors() {
    let dir = scratch("verify-bad");
    let file = gen(&dir, "forced.json", &["--family", "two-vertex", "--k", "1"]);
    let conflicted = dir.join("conflicted.json");
    std::fs::write(&conflicted, r#"{"colours":[1,1]}"#).unwrap();
    let out = run(bin().args(["verify", file.to_str().unwrap(), conflicted.to_str().unwrap()]));
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("[0]"));

    let out_of_range = dir.join("out_of_range.json");
    std::fs::write(&out_of_range, r#"{"colours":[1,7]}"#).unwrap();
    let out =
        run(bin().args(["verify", file.to_str().unwrap(), out_of_range.to_str().unwrap()]));
    assert_eq!(code(&out), 2);
}

#[test]
fn exact_ch_prints_oracle_value() {
    let dir = scratch("exact-ch");
    let file = gen(&dir, "two_vertex.json", &["--family", "two-vertex", "--k", "2"]);
    let out = run(bin().args(["exact-ch", file.to_str().unwrap(), "--kmax", "3"]));
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");

    let out = run(bin().args(["exact-ch", file.to_str().unwrap(), "--kmax", "2"]));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), ">2");
}

#[test]
fn bounds_formulas_print_values() {
    let out = run(bin().args(["bounds", "--formula", "max-degree", "--delta", "5"]));
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("colours=5"));

    let out = run(bin().args(["bounds", "--formula", "heawood", "--g", "0"]));
    assert!(String::from_utf8_lossy(&out.stdout).contains("triangle_free=3"));

    let out = run(bin().args(["bounds", "--formula", "edges", "--m", "2"]));
    assert_eq!(code(&out), 2);
}

#[test]
fn split_solver_reads_adaptable_files() {
    let dir = scratch("split");
    let g = conflict_colouring::adversary::gen_random_simple_graph(40, 120, 0, 3).unwrap();
    let lists: Vec<Vec<usize>> = (0..40).map(|_| (1..=16).collect()).collect();
    let labels = conflict_colouring::adversary::random_labels(120, 16, 4);
    let a = conflict_colouring::reductions::AdaptableInstance::new(g, lists, labels).unwrap();
    let path = dir.join("adaptable.json");
    conflict_colouring::io::write_adaptable(&path, &a).unwrap();
    let out = run(bin().args([
        "solve",
        path.to_str().unwrap(),
        "--solver",
        "split",
        "--seed",
        "9",
        "--json",
    ]));
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let payload: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("json report");
    assert_eq!(payload["valid"], serde_json::Value::Bool(true));
}

#[test]
fn bench_is_byte_identical_across_runs() {
    let dir = scratch("bench");
    let corpus = dir.join("corpus");
    std::fs::create_dir_all(&corpus).unwrap();
    for i in 0..3 {
        gen(
            &corpus,
            &format!("tri{i}.json"),
            &["--family", "planar", "--n", "15", "--k", "4", "--seed", &i.to_string()],
        );
    }
    let json_a = dir.join("a.json");
    let json_b = dir.join("b.json");
    for path in [&json_a, &json_b] {
        let out = run(bin().args([
            "bench",
            "--corpus",
            corpus.to_str().unwrap(),
            "--solvers",
            "exact,orient,lll",
            "--seeds",
            "1,2",
            "--json-out",
            path.to_str().unwrap(),
        ]));
        assert_eq!(code(&out), 0);
    }
    let a = std::fs::read(&json_a).unwrap();
    let b = std::fs::read(&json_b).unwrap();
    assert_eq!(a, b, "machine-readable bench output must be deterministic");
}

#[test]
fn bench_empty_corpus_is_ok() {
    let dir = scratch("bench-empty");
    let corpus = dir.join("corpus");
    std::fs::create_dir_all(&corpus).unwrap();
    let out = run(bin().args([
        "bench",
        "--corpus",
        corpus.to_str().unwrap(),
        "--solvers",
        "exact",
        "--seeds",
        "1",
    ]));
    assert_eq!(code(&out), 0);
}
