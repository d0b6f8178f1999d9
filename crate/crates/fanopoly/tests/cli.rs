use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fanopoly")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn analyze_weighted_plane() {
    let v = json(&["analyze", "[[1,0],[0,1],[-1,-3]]"]);
    assert_eq!(v["degree"], "25/3");
    assert_eq!(v["minimal"], true);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["hilbert"].as_array().unwrap().len(), 13);
}

#[test]
fn analyze_text_and_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fanopoly"))
        .args(["--format", "text", "analyze", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"[[1,0],[0,1],[-1,0],[0,-1]]").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains('8'), "{text}");
}

#[test]
fn mutate_worked_example() {
    let v = json(&["--raw", "mutate", "[[1,1],[0,1],[-1,-2]]", "--normal", "0,-1"]);
    let mut got: Vec<(i64, i64)> =
        v["vertices"].as_array().unwrap().iter().map(|p| (p[0].as_i64().unwrap(), p[1].as_i64().unwrap())).collect();
    got.sort();
    assert_eq!(got, vec![(-1, -2), (0, 1), (1, -2)]);
}

#[test]
fn mutate_without_edge_choice_fails() {
    let out = run(&["mutate", "[[1,1],[0,1],[-1,-2]]"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["mutate", "[[1,0],[0,1],[-1,-3]]", "--normal", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_exit_code() {
    let out = run(&["analyze", "[[2,0],[0,1],[-1,-1]]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = run(&["analyze", "[[1,0],[0,1],[-1,x]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_formats() {
    let v = json(&["--max-boundary", "30", "orbit", "[[1,1],[0,1],[-1,-2]]", "--depth", "2"]);
    assert!(v["nodes"].as_array().unwrap().len() >= 3);
    let out = run(&["--format", "dot", "--max-boundary", "30", "orbit", "[[1,1],[0,1],[-1,-2]]", "--depth", "2"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph mutations {"));
}

#[test]
fn minimize_and_quiver() {
    let v = json(&["minimize", "[[0,1],[-1,-3],[3,-7]]"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    let q = json(&["quiver", "[[1,0],[0,1],[-1,-1]]"]);
    assert_eq!(q["n"], 3);
    let m = json(&["quiver", "[[1,0],[0,1],[-1,-1]]", "--mutate", "0"]);
    assert_eq!(m["n"], 3);
}

#[test]
fn classify_table_file() {
    let v = json(&["classify", &data("table1.json")]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(v["polygons"].as_array().unwrap().len(), 14);
    assert!(!classes.is_empty());
    let out = run(&["--format", "csv", "classify", &data("table1.json")]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("vertices,n,basket,degree,divisors,class"));
}

#[test]
fn enumerate_and_verify() {
    let v = json(&["enumerate", "reflexive"]);
    assert_eq!(v["polygons"].as_array().unwrap().len(), 16);
    let v = json(&["enumerate", "max-index", "2"]);
    assert_eq!(v["polygons"].as_array().unwrap().len(), 46);
    let out = run(&["--format", "text", "verify-table", "table2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "table2: 21 rows ok\n");
    assert_eq!(run(&["verify-table", "table9"]).status.code(), Some(2));
}
