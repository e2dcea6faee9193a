use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn romdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_romdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn solve_path_roman() {
    let out = romdom(&["solve", "--family", "path:4", "--invariant", "gamma-r"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["invariant"], "gamma-r");
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn solve_star_and_k1() {
    let out = romdom(&["solve", "--family", "star:5", "--invariant", "gamma-r"]);
    assert_eq!(json_stdout(&out)["value"], 2);
    let out = romdom(&["solve", "--g6", "@", "--invariant", "gamma"]);
    assert_eq!(json_stdout(&out)["value"], 1);
}

#[test]
fn solve_file_emits_one_line_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    fs::write(&path, "C~\nCh\n").unwrap();
    let out = romdom(&["solve", "--file", path.to_str().unwrap(), "--invariant", "gamma"]);
    assert!(out.status.success());
    let values: Vec<i64> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["value"].as_i64().unwrap())
        .collect();
    assert_eq!(values, vec![1, 2]);
}

#[test]
fn bad_graph6_exits_2() {
    let out = romdom(&["solve", "--g6", "C~~~~", "--invariant", "gamma"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_error_exits_2() {
    assert_eq!(romdom(&["solve", "--family", "path:3"]).status.code(), Some(2));
    assert_eq!(romdom(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn capacity_error_exits_2() {
    let out = romdom(&["product", "--a", "path:9", "--b", "path:9", "--kind", "strong"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn product_grid() {
    let out = romdom(&["product", "--a", "path:3", "--b", "path:3", "--kind", "cartesian"]);
    assert!(out.status.success());
    let line = String::from_utf8(out.stdout).unwrap();
    let g = romdom::parse_graph6(line.trim()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (9, 12));
}

#[test]
fn construct_reports_weight_and_bound() {
    let out = romdom(&["construct", "--a", "path:3", "--b", "spider:3:1", "--theorem", "eldek"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["weight"], 8);
    assert_eq!(v["claimed_bound"], 8);
    assert_eq!(v["valid"], true);
    for key in ["labels", "selection_mode"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn families_range() {
    let out = romdom(&["families", "--kind", "cycle", "--from", "3", "--to", "5"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Bw\nCl\nDhc\n");
}

#[test]
fn verify_exhaustive_with_report_and_log() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let log = dir.path().join("run.jsonl");
    let args = [
        "verify",
        "--corpus",
        "exhaustive",
        "--max-n",
        "4",
        "--theorems",
        "L1,L2-B2,L2-B1",
        "--report",
        report.to_str().unwrap(),
        "--log",
        log.to_str().unwrap(),
    ];
    let out = romdom(&args);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["records"].as_array().unwrap().len(), 225);
    assert_eq!(r["summary"]["held"], 225);

    // The log is append-only: a second run keeps the first run's lines.
    let first = fs::read_to_string(&log).unwrap();
    assert_eq!(first.lines().count(), 225);
    assert_eq!(romdom(&args).status.code(), Some(0));
    let second = fs::read_to_string(&log).unwrap();
    assert!(second.starts_with(&first));
    assert_eq!(second.lines().count(), 450);
    let line: Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    assert!(line["timestamp"].is_string());
    assert_eq!(line["theorem"], "L1-sandwich");
}

#[test]
fn verify_superior_has_tight_path_star_record() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = romdom(&["verify", "--theorems", "T-superior", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let hit = r["records"].as_array().unwrap().iter().find(|rec| {
        rec["instance"]["g"] == "P3" && rec["instance"]["h"] == "K1,2"
    });
    assert_eq!(hit.unwrap()["tight"], true);
}

#[test]
fn verify_unwritable_report_exits_2() {
    let out = romdom(&["verify", "--theorems", "L1", "--report", "/nonexistent-dir/r.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let out = romdom(&[
        "verify",
        "--graphs",
        "path:3,cycle:4",
        "--theorems",
        "EQ-chino",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 5);
    // Without --report the full report goes to stdout.
    assert_eq!(json_stdout(&out)["summary"]["records"], 4);
}

#[test]
fn premise_check_cycle_five() {
    let out = romdom(&["premise-check", "--n", "5", "--kind", "cycle"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["premise_holds"], false);
    assert_eq!(v["b2_sizes"], serde_json::json!([1, 2]));
}
