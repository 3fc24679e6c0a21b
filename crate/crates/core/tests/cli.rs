use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cmpowers"))
}

fn write_graph(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C5: &str = "# five-cycle\nn 5\n1 2\n2 3\n3 4\n4 5\n1 5\n";
const P5: &str = "n 5\n1 2\n2 3\n3 4\n4 5\n";

#[test]
fn analyze_json_reports_each_power() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "c5.txt", C5);
    let o = run(&["analyze", s(&g), "--m-max", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "Cycle");
    assert_eq!(v["diameter"], 2);
    let powers = v["powers"].as_array().unwrap();
    assert_eq!(powers.len(), 3);
    assert_eq!(powers[1]["m"], 2);
    assert_eq!(powers[1]["cm_symbolic"], true);
    assert_eq!(powers[2]["cm_symbolic"], false);
    assert!(powers[2]["symbolic_witness"].is_object());
}

#[test]
fn analyze_exits_two_on_a_prediction_mismatch() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "p5.txt", P5);
    let o = run(&["analyze", s(&g), "--m-max", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn delta_prints_facets() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "c5.txt", C5);
    let o = run(&["delta", "--graph", s(&g), "--m", "3", "--a", "2,0,1,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{1,2}\n{1,5}\n{3,4}\n");

    let o = run(&["delta", "--graph", s(&g), "--m", "3", "--a", "2,0,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cohomology_table_ends_with_depth() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "c5.txt", C5);
    let o = run(&["cohomology", "--graph", s(&g), "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("i\ta\tdim\n"));
    assert!(out.contains("1\t(2,0,1,1,0)\t1\n"));
    assert!(out.trim_end().ends_with("# depth 1 krull_dim 2"));

    let o = run(&["cohomology", "--graph", s(&g), "--m", "2", "--ordinary"]);
    assert!(stdout(&o).trim_end().ends_with("# depth 2 krull_dim 2"));
}

#[test]
fn verify_passes_and_fails_with_exit_codes() {
    let o = run(&[
        "verify",
        "--theorem",
        "cm-sym-2",
        "--n-min",
        "4",
        "--n-max",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("41 graphs, 0 mismatches"));

    let o = run(&[
        "verify",
        "--theorem",
        "EQ-2",
        "--n-min",
        "5",
        "--n-max",
        "5",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 60);
}

#[test]
fn census_writes_csv() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("n4.csv");
    let o = run(&["census", "--n", "4", "--m-max", "2", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&out).unwrap();
    assert!(rdr.headers().unwrap().iter().any(|h| h == "cm_symbolic"));
    assert_eq!(rdr.records().count(), 41 * 2);
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(
        run(&["analyze", "/nonexistent/graph.txt"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "verify",
            "--theorem",
            "NOPE",
            "--n-min",
            "4",
            "--n-max",
            "4"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "verify",
            "--theorem",
            "EQ-2",
            "--n-min",
            "4",
            "--n-max",
            "4",
            "--m",
            "3"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["census", "--n", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "bad.txt", "n 4\n1 2\n2 3\n");
    let o = run(&["analyze", s(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
