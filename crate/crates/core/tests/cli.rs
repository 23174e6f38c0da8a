mod common;

use std::process::Command;

use common::data;
use serde_json::{json, Value};

fn nctoric(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nctoric")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn payload(args: &[&str]) -> (i32, Value) {
    let (code, stdout) = nctoric(args);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    (code, v)
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_owned()
}

#[test]
fn normal_fan_of_square() {
    let (code, v) = payload(&["fan", "of-polytope", &path("square.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["cones"].as_array().unwrap().len(), 9);
}

#[test]
fn gvec_octahedron() {
    let (code, v) = payload(&["gvec", "--f", "1,6,12,8", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["h"], json!([1, 3, 3, 1]));
    assert_eq!(v["payload"]["pass"], true);
}

#[test]
fn morita_translation() {
    let (code, v) = payload(&["nctorus", "morita", "--theta1", "sqrt(2)", "--theta2", "1+sqrt(2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["equivalent"], true);
    assert_eq!(v["payload"]["witness"], json!([[1, 1], [0, 1]]));
}

#[test]
fn error_envelopes_and_exit_codes() {
    let (code, v) = payload(&["hj", "expand", "--value", "sqrt(-1)"]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "error");
    assert_eq!(v["payload"]["error"]["kind"], "InputError");
    let (code, _) = payload(&["polytope", "info", "/nonexistent.json"]);
    assert_eq!(code, 3);
    let (code, v) = payload(&["nctorus", "morita", "--theta1", "sqrt(2)", "--theta2", "sqrt(3)"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["equivalent"], false);
    let (code, _) = nctoric(&["--bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn svg_to_stdout_and_file() {
    let (code, svg) = nctoric(&["polytope", "svg", &path("square.json")]);
    assert_eq!(code, 0);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let target = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("fan.svg");
    let out = format!("svg:{}", target.display());
    let (code, v) = payload(&["fan", "of-polytope", &path("square.json"), "--out", &out]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["cones"].as_array().unwrap().len(), 9);
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written.matches("<line").count(), 4);
}

#[test]
fn lvm_pipeline() {
    let file = path("lvm_siegel.json");
    let (_, check) = payload(&["lvm", "check", &file]);
    assert_eq!(check["payload"]["admissible"], true);
    let (_, p) = payload(&["lvm", "polytope", &file]);
    assert_eq!(p["payload"]["classification"], "IntegralDelzant");
    assert_eq!(p["payload"]["vertices"].as_array().unwrap().len(), 4);
    let (_, o) = payload(&["lvm", "orbifold", &path("teardrop4.json")]);
    let orders: Vec<u64> = o["payload"]["endpoints"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["order"].as_u64().unwrap())
        .collect();
    let mut sorted = orders.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 3]);
}

#[test]
fn hochschild_builtins() {
    let (_, v) = payload(&["hh", "ranks", "--builtin", "pair2", "--upto", "2"]);
    assert_eq!(v["payload"]["ranks"], json!([1, 0, 0]));
    let (_, v) = payload(&["hh", "hp", "--builtin", "z2", "--N", "3"]);
    assert_eq!(v["payload"]["even"], 2);
    assert_eq!(v["payload"]["odd"], 0);
    assert_eq!(v["payload"]["stabilized"], true);
}
