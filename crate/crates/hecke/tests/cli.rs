use std::path::PathBuf;

use hecke::cli::{main_with, suite_exit_code, EXIT_CONFIG, EXIT_FAILURE, EXIT_OK, EXIT_OVERFLOW};
use hecke::suites::{CaseResult, Suite, SuiteResult};
use serde_json::Value;

fn run(args: &[&str]) -> i32 {
    main_with(std::iter::once("hecke").chain(args.iter().copied()))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn read_json(p: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

const P29: [&str; 8] = ["--n", "3", "--p", "29", "--alpha-order", "7", "--beta-spec", "2"];

#[test]
fn verify_writes_report() {
    let out = tmp("verify.json");
    let mut args = vec!["verify"];
    args.extend(P29);
    args.extend(["--suite", "relations,forms,branching", "--out", out.to_str().unwrap()]);
    assert_eq!(run(&args), EXIT_OK);
    let v = read_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["passed"], true);
    assert_eq!(v["setting"]["type"], "B");
    assert_eq!(v["setting"]["field"]["q"], 29);
    assert_eq!(v["setting"]["beta"], serde_json::json!([2]));
    assert_eq!(v["setting"]["field_case"]["case"], 1);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 3);
    assert_eq!(suites[0]["suite"], "relations");
    // One case per double-partition of 3.
    assert_eq!(suites[0]["cases"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_default_suites_type_d_and_a() {
    assert_eq!(run(&["verify", "--type", "D", "--n", "4", "--case", "2", "--suite", "relations,forms,unitary"]), EXIT_OK);
    assert_eq!(run(&["verify", "--type", "A", "--n", "4", "--p", "29", "--alpha-order", "7"]), EXIT_OK);
}

#[test]
fn predict_json() {
    let out = tmp("predict.json");
    assert_eq!(run(&["predict", "--type", "d", "--n", "4", "--case", "1", "--out", out.to_str().unwrap()]), EXIT_OK);
    let v = read_json(&out);
    assert_eq!(v["command"], "predict");
    let preds = v["predictions"].as_array().unwrap();
    let row = preds.iter().find(|r| r["module"] == "([2,1],[1])").unwrap();
    assert_eq!(row["image"], "SP(8, q)");
    assert_eq!(row["dim"], 8);
}

#[test]
fn enumerate_small_image() {
    let out = tmp("enumerate.json");
    let mut args = vec!["enumerate-image"];
    args.extend(["--n", "2", "--p", "29", "--alpha-order", "7", "--beta-spec", "2"]);
    args.extend(["--out", out.to_str().unwrap()]);
    assert_eq!(run(&args), EXIT_OK);
    let v = read_json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["images"][0]["enumerated_order"], 24360);
    assert_eq!(v["images"][0]["predicted_order"], "24360");
    assert!(v["note"].as_str().unwrap().contains("enumeration terminates"));
}

#[test]
fn overflow_exit_code() {
    let out = tmp("overflow.json");
    let mut args = vec!["enumerate-image"];
    args.extend(P29);
    args.extend(["--cap", "1000", "--out", out.to_str().unwrap()]);
    assert_eq!(run(&args), EXIT_OVERFLOW);
    let v = read_json(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["images"][0]["overflow"], 1000);
}

#[test]
fn config_errors() {
    let bad: &[&[&str]] = &[
        &["verify"],
        &["verify", "--n", "3", "--bogus"],
        &["frobnicate"],
        &["verify", "--type", "D", "--n", "3", "--case", "1"],
        &["verify", "--type", "D", "--n", "4", "--p", "2", "--alpha-order", "31"],
        &["verify", "--n", "3", "--case", "7"],
        &["verify", "--n", "3", "--p", "4", "--alpha-order", "7"],
        &["verify", "--n", "3", "--p", "29", "--alpha-order", "7", "--beta-spec", "coeffs:x"],
        &["verify", "--n", "3", "--p", "29", "--alpha-order", "4", "--beta-spec", "2"],
        &["verify", "--n", "3", "--p", "29", "--alpha-order", "7", "--beta-spec", "1"],
        &["verify", "--n", "3", "--p", "29", "--alpha-order", "7", "--beta-spec", "2", "--suite", "nope"],
        &["verify", "--type", "D", "--n", "4", "--case", "1", "--suite", "exterior"],
        &["verify", "--type", "D", "--n", "4", "--case", "1", "--beta-spec", "2"],
        &["predict", "--n", "3", "--p", "29"],
    ];
    for args in bad {
        assert_eq!(run(args), EXIT_CONFIG, "{args:?}");
    }
    let out = tmp("missing-dir").join("nested").join("x.json");
    let mut args = vec!["predict"];
    args.extend(P29);
    args.extend(["--out", out.to_str().unwrap()]);
    assert_eq!(run(&args), EXIT_CONFIG);
}

#[test]
fn help_and_version() {
    assert_eq!(run(&["--help"]), EXIT_OK);
    assert_eq!(run(&["--version"]), EXIT_OK);
}

#[test]
fn failing_suite_maps_to_one() {
    let case = |passed| CaseResult { label: "x".into(), passed, detail: Value::Null };
    let ok = SuiteResult { suite: Suite::Relations, passed: true, cases: vec![case(true)] };
    let bad = SuiteResult { suite: Suite::Forms, passed: false, cases: vec![case(false)] };
    assert_eq!(suite_exit_code(&[ok.clone()]), EXIT_OK);
    assert_eq!(suite_exit_code(&[ok, bad]), EXIT_FAILURE);
    assert_eq!(suite_exit_code(&[]), EXIT_OK);
}
