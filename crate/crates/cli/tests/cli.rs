//! Output formats and exit codes of the binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symat")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn human_output_of_the_triangle() {
    let out = run(&["matroid", &data("k3.mat")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "ground: 3\nrank: 3\nbases: 4\nbasis: {1, 2, 3}\nbasis: {1, 2*, 3*}\nbasis: {1*, 2, 3*}\nbasis: {1*, 2*, 3}\n"
    );
}

#[test]
fn structured_output_is_json_lines() {
    let out = run(&["--format", "structured", "poly-tm", &data("k3.mat")]);
    let records: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records[0]["key"], "(x-1)-basis");
    assert_eq!(records[0]["value"], serde_json::json!([4, 4]));
    assert_eq!(records[2]["value"], "4x");
}

#[test]
fn graph_files_feed_polynomial_and_sharing_verbs() {
    let out = run(&["--format", "tsv", "poly-verify", &data("k3.graph")]);
    assert!(stdout(&out).ends_with("equal\ttrue\n"));
    let out = run(&["--format", "tsv", "qss", "--all-dealers", &data("c5.graph")]);
    assert_eq!(stdout(&out).matches("verdict\tINVALID").count(), 5);
}

#[test]
fn saved_matroids_read_back() {
    let dir = std::env::temp_dir().join(format!("symat-save-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let saved = dir.join("dual.smat").display().to_string();
    assert_eq!(run(&["dual", &data("k3.mat"), "--save", &saved]).status.code(), Some(0));
    let again = run(&["--format", "tsv", "matroid", &saved]);
    assert!(stdout(&again).contains("bases\t4\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ill_formed_files_exit_65_with_a_line_number() {
    let out = run(&["matroid", &data("bad_row.mat")]);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
    assert_eq!(run(&["matroid", "/nonexistent/input.mat"]).status.code(), Some(65));
}

#[test]
fn validation_errors_exit_2_with_their_name() {
    let out = run(&["matroid", &data("not_isotropic.mat")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("NotIsotropic"));
    let out = run(&["lift", &data("planted.smat")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("NotAMatroid"));
    let out = run(&["contract", &data("k3.mat"), "1*"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["--field", "4", "matroid", &data("k3.mat")]).status.code(), Some(64));
    assert_eq!(run(&["qss", &data("qss6.mat")]).status.code(), Some(64));
}
