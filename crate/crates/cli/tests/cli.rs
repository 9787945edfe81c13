use std::fs;
use std::process::{Command, Output};

use turan_core::io::Document;

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(turan(&["rho", "--family", "Trt:r=3,t=1"]).status.code(), Some(0));
    // domain error
    assert_eq!(turan(&["realize", "--a", "5", "--b", "9"]).status.code(), Some(1));
    // usage errors
    assert_eq!(turan(&["family", "--family", "bogus"]).status.code(), Some(2));
    assert_eq!(turan(&["realize", "--a", "5"]).status.code(), Some(2));
    assert_eq!(turan(&["no-such-command"]).status.code(), Some(2));
    let err = turan(&["realize", "--a", "5", "--b", "9"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error: "));
}

#[test]
fn rho_and_balanced() {
    assert_eq!(stdout(&turan(&["rho", "--family", "Trt:r=3,t=1"])).trim(), "3/2");
    let rep = json(&turan(&["balanced", "--family", "Trt:r=1,t=2"]));
    assert_eq!(rep["balanced"], false);
    assert_eq!(rep["witness"], serde_json::json!([0]));
    assert_eq!(rep["rho"], "3/2");
}

#[test]
fn family_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let p = path.to_str().unwrap();
    stdout(&turan(&["family", "--family", "power:base=(Trt:r=2,t=1),l=2", "-o", p]));
    let written = fs::read_to_string(&path).unwrap();
    assert_eq!(stdout(&turan(&["export", "--input", p])), written);

    let doc = Document::load(&path).unwrap();
    assert_eq!(Document::from_json(&doc.to_json()).unwrap(), doc);
    let f = doc.rooted().unwrap();
    assert_eq!(f.graph().n(), 8);
    assert_eq!(f.roots().len(), 2);
    assert_eq!(stdout(&turan(&["rho", "--input", p])).trim(), "4/3");

    let dot = stdout(&turan(&["export", "--input", p, "--format", "dot"]));
    assert!(dot.starts_with("graph G {"));
}

#[test]
fn realize_fields() {
    let cert = json(&turan(&["realize", "--a", "5", "--b", "16"]));
    assert_eq!(cert["a"], 5);
    assert_eq!(cert["b"], 16);
    assert_eq!(cert["base"]["kind"], "theta");
    assert_eq!(cert["base"]["len"], 6);
    assert_eq!(cert["reductions"], 2);
    assert_eq!(cert["s0"], 16);
    assert_eq!(cert["exponent"], "27/16");
    assert_eq!(cert["verified"], true);
}

#[test]
fn extremal_small() {
    let res = json(&turan(&["extremal", "--n", "4", "--h", "C:n=4", "--s", "2"]));
    assert_eq!(res["value"], 4);
}

#[test]
fn check_reports_are_clean() {
    let rep = json(&turan(&["check", "kst", "--trials", "20", "--s", "3"]));
    assert_eq!(rep["trials"], 20);
    assert_eq!(rep["violations"], serde_json::json!([]));
}

#[test]
fn planted_extraction() {
    let out = json(&turan(&[
        "embed",
        "extract",
        "--family",
        "path:len=2",
        "--planted-lambda",
        "5",
        "--dirty",
        "0,1,2",
        "--l",
        "2",
        "--s",
        "3",
    ]));
    assert_eq!(out["found"], true);
    assert_eq!(out["chosen"], serde_json::json!([3, 4]));
}

#[test]
fn sweep_table_has_one_row_per_certificate() {
    let table = stdout(&turan(&["sweep", "--amax", "3", "--bmax", "10", "--format", "table"]));
    let rows = table.lines().count() - 1;
    let certs = json(&turan(&["sweep", "--amax", "3", "--bmax", "10"]));
    assert_eq!(rows, certs.as_array().unwrap().len());
}
