use std::process::Command;

use ramsey_good::coloring::{import_witness, verify_coloring};
use ramsey_good::named_graph;
use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramsey-good")).args(args).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, out.status.code().unwrap())
}

#[test]
fn search_writes_a_verifiable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h1.txt");
    let (v, code) = run(&["search", "--graph", "H1", "--p", "3", "--n", "6", "--witness-file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["outcome"], "witness-found");
    assert!(v["elapsed_ms"].is_number());
    let c = import_witness(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(verify_coloring(&c, &named_graph("H1").unwrap(), 3).unwrap().is_good());

    let (v, code) = run(&["search", "--graph", "H1", "--p", "3", "--n", "7"]);
    assert_eq!((v["output"]["outcome"].as_str(), code), (Some("exhausted"), 0));
}

#[test]
fn turan_and_sample_files() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("turan.txt");
    let (v, code) = run(&["turan", "--h", "5", "--p", "4", "--emit-witness", w.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["bound"], 13);
    let c = import_witness(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(c.order(), 12);

    let g6 = dir.path().join("w.g6");
    let (v, _) = run(&["sample", "--n", "40", "--girth", "4", "--seed", "3", "--emit", g6.to_str().unwrap()]);
    let text = std::fs::read_to_string(&g6).unwrap();
    assert_eq!(v["output"]["graph"], text.as_str());
    let (check, code) = run(&["verify-witness", "--graph", &text, "--girth", "4", "--p", &v["output"]["p"].to_string()]);
    assert_eq!(check["output"]["valid"], v["output"]["certified"]);
    assert_eq!(code, if v["output"]["certified"] == true { 0 } else { 1 });
}

#[test]
fn bad_catalog_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"[{"graphs": ["H1", "K3"], "value": 5, "source": "user"}]"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ramsey-good"))
        .args(["catalog-check", "--catalog", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(H1, K3)"));
}
