use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepdeform"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

#[test]
fn decompose_b2_has_three_summands() {
    let (v, code) = json(&["decompose", "bn", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["summands"].as_array().unwrap().len(), 3);
    assert_eq!(v["payload"]["total"], 8);
}

#[test]
fn decompose_text_mentions_every_summand() {
    let out = run(&["decompose", "dn", "--n", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("⊕ M_").count(), 3);
    assert!(text.contains("total 192 (expected 192)"));
    assert!(!text.contains('\u{1b}'));
}

#[test]
fn cubic_idempotent() {
    let (v, code) = json(&["idempotent", "cyclic", "--r", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["denominator"], "4*t^3 - 27");
    assert_eq!(v["payload"]["numerator"].as_array().unwrap().len(), 9);
}

#[test]
fn split_and_symmetric_forms() {
    assert_eq!(json(&["idempotent", "cyclic", "--r", "4", "--split"]).1, 0);
    assert_eq!(json(&["idempotent", "cyclic", "--r", "3", "--symmetric"]).1, 0);
    let (v, code) = json(&["idempotent", "cyclic", "--r", "6", "--split"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
}

#[test]
fn budget_exceeded_exits_3() {
    let (v, code) = json(&["idempotent", "cyclic", "--r", "8", "--symmetric"]);
    assert_eq!(code, 3);
    assert!(v["error"].as_str().unwrap().contains("budget"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "cn", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["idempotent", "cyclic", "--r", "3", "--split", "--symmetric"]).status.code(), Some(2));
    assert_eq!(run(&["hecke", "mul", "--n", "3", "--left", "s3", "--right", "s1"]).status.code(), Some(2));
}

#[test]
fn hecke_product() {
    let (v, code) = json(&["hecke", "mul", "--n", "3", "--left", "s1", "--right", "s1 s2"]);
    assert_eq!(code, 0);
    let product = v["payload"]["product"].as_array().unwrap();
    assert_eq!(product.len(), 2);
    assert!(product.iter().any(|t| t["coefficient"] == "q - q^-1"));
}

#[test]
fn orbits_and_middle_orbit() {
    let (v, code) = json(&["orbits", "--n", "5"]);
    assert_eq!(code, 0);
    let sizes: Vec<u64> = v["payload"]["orbits"]["orbits"].as_array().unwrap().iter().map(|o| o["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![1, 6, 15, 10]);
    assert!(v["payload"]["middle"]["ok"].as_bool().unwrap());
    assert_eq!(json(&["orbits", "--n", "1"]).1, 1);
}

#[test]
fn section11_reports_the_sign_discrepancy() {
    let (v, code) = json(&["matrices", "section11"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "partial");
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0]["detail"].as_str().unwrap().contains("(4,4)"));
}

#[test]
fn algebra_spec_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"basis": ["1", "x"], "unit": {{"1": "1"}}, "products": {{"x*x": {{"1": "1", "x": "t"}}}}, "generators": ["x"]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let (v, code) = json(&["idempotent", "algebra", "--spec", path]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["denominator"], "t^2 + 4");

    // x^2 = 0 is not separable
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"basis": ["1", "x"], "unit": {{"1": "1"}}}}"#).unwrap();
    let (v, code) = json(&["idempotent", "algebra", "--spec", file.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "fail");

    assert_eq!(run(&["idempotent", "algebra", "--spec", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn verify_all_small() {
    let (v, _) = json(&["verify", "all", "--max-n", "3"]);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 11);
    let failing: Vec<u64> = v["payload"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["passed"] == false)
        .map(|o| o["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, vec![3, 10]);
}

#[test]
fn json_reports_round_trip() {
    let (v, _) = json(&["section3"]);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    assert!(v["elapsed_ms"].is_u64());
    assert_eq!(v["command"], "section3 --recipe quadratic");
}
