use std::process::{Command, Output};

use serde_json::Value;

fn finring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.stdout.ends_with(b"\n"));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_json_schema() {
    let out = finring(&["classify", "GR(Z(2), C(2))", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        ["flags", "label", "order", "radicals", "timing", "witnesses"]
    );
    assert_eq!(v["flags"]["regular"], false);
    assert_eq!(v["flags"]["strongly_unit_nil_clean"], true);
    assert_eq!(v["flags"].as_object().unwrap().len(), 12);
    assert_eq!(
        v["witnesses"]["regular"]["literal"],
        serde_json::json!({"e": 1, "a": 1})
    );
}

#[test]
fn classify_fast_reports_agreement() {
    let out = finring(&["classify", "Z(6)", "--fast", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["flags"]["unit_regular"], true);
    assert!(v["fast"]
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["agree"] == true));
    let out = finring(&["classify", "GR(Z(3), C(3))", "--fast"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("agree"));
}

#[test]
fn exit_codes() {
    assert_eq!(finring(&["classify", "Z(0)"]).status.code(), Some(2));
    let out = finring(&["classify", "M(2, Z(2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unbalanced"));
    assert_eq!(finring(&["classify", "M(3, Z(4))"]).status.code(), Some(3));
    assert_eq!(
        finring(&["classify", "Z(100)", "--cap", "50"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(finring(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        finring(&["verify", "zn-unit-regular", "--n-max", "300"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(finring(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = finring(&["verify", "zn-unit-regular", "--n-max", "60", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["attempted"], 60);
    assert_eq!(v["passed"], 60);
    assert_eq!(v["evidence"], "discriminating");
    assert_eq!(
        finring(&["verify", "zng-unit-regular"]).status.code(),
        Some(0)
    );
    assert_eq!(finring(&["verify", "morita-sunc"]).status.code(), Some(0));
}

#[test]
fn radicals_and_info() {
    let v = json(&finring(&["radicals", "Z(4)", "--json"]));
    assert_eq!(v["jacobson"], serde_json::json!([0, 2]));
    assert_eq!(v["nil"], serde_json::json!([0, 2]));
    let v = json(&finring(&["info", "M(2, Z(2))", "--json"]));
    assert_eq!(v["order"], 16);
    assert_eq!(v["units"], 6);
    assert_eq!(v["commutative"], false);
    let out = finring(&["info", "Z(12)"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("idempotents"));
}
