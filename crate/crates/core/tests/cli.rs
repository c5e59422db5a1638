use std::process::Command;

use grumod::cli::run_command;
use grumod::props::SUITES;
use serde_json::Value;

const PAIR2_QQ: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/pair2_qq.json");
const PAIR2_GF2: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/pair2_gf2.json");
const T2_GF2: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/t2_gf2.json");

fn run(args: &[&str]) -> (i32, Value) {
    let (code, text) = run_command(args);
    (code, serde_json::from_str(&text).expect("output is json"))
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_grumod")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn object_unital_analysis_exits_zero() {
    let (code, v) = run(&["analyze", PAIR2_QQ, "--target", "R", "--checks", "object-unital"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["verdict"], "yes");
    assert_eq!(v["results"][0]["certificate"]["local_identities"].as_object().unwrap().len(), 2);
}

#[test]
fn empty_star_product_exits_one() {
    let (code, v) = run(&["star", PAIR2_QQ, "--sets", "{(1,2)}", "{(1,2)}"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "empty-product");
}

#[test]
fn malformed_input_exits_two() {
    let bad = scratch("bad_schema.json");
    std::fs::write(&bad, r#"{"format_version": 1, "field": 7}"#).unwrap();
    let (code, v) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("schema-error")));

    let (code, v) = run(&["analyze", PAIR2_QQ, "--target", "nowhere"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("dangling-reference")));

    let (code, v) = run(&["analyze", PAIR2_QQ, "--target", "R", "--checks", "split"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("usage-error")));

    let (code, _) = run_command(&["no-such-command"]);
    assert_eq!(code, 2);

    let (code, v) = run(&["validate", "/nonexistent/file.json"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("io")));
}

#[test]
fn gf2_props_run_reports_every_suite() {
    let out = bin(&["props", "--suite", "paper", "--seed", "42", "--field", "gf2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 9);
    assert!(suites.iter().all(|s| s["passed"] == true));
}

#[test]
fn props_output_is_deterministic() {
    let args = ["props", "--suite", "splitting", "--seed", "7", "--field", "gf3"];
    assert_eq!(run_command(&args), run_command(&args));
    let other = run_command(&["props", "--suite", "splitting", "--seed", "8", "--field", "gf3"]);
    assert_eq!(other.0, 0);
}

#[test]
fn suites_follow_the_criteria() {
    assert_eq!(SUITES.len(), 9);
    let (_, v) = run(&["props", "--suite", "subset-monoid", "--field", "gf2"]);
    assert_eq!(v["suites"][0]["criterion"], 1);
}

#[test]
fn analyze_then_verify_certificates() {
    for (fixture, target) in [(PAIR2_GF2, "M"), (T2_GF2, "TM"), (T2_GF2, "ke12"), (PAIR2_QQ, "R")] {
        let (_, text) = run_command(&["analyze", fixture, "--target", target]);
        let report = scratch(&format!("report_{target}.json"));
        std::fs::write(&report, &text).unwrap();
        let (code, v) = run(&["verify-cert", report.to_str().unwrap()]);
        assert_eq!(code, 0, "{target}: {v}");
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn tampered_fixture_hash_fails_verification() {
    let (_, text) = run_command(&["analyze", T2_GF2, "--target", "TM", "--checks", "projective"]);
    let mut report: Value = serde_json::from_str(&text).unwrap();
    report["fixture"]["sha256"] = Value::String("0".repeat(64));
    let path = scratch("tampered.json");
    std::fs::write(&path, serde_json::to_string(&report).unwrap()).unwrap();
    let (code, v) = run(&["verify-cert", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["verified"], false);
}

#[test]
fn hom_and_suspend_report_dimensions() {
    let (code, v) = run(&["hom", PAIR2_QQ, "--from", "M", "--to", "M"]);
    assert_eq!(code, 0);
    assert_eq!(v["graded_dim"], 4);
    assert_eq!(v["hom_dim"], 4);
    let (code, v) = run(&["suspend", PAIR2_QQ, "--target", "M", "--sigma", "(1,2)"]);
    assert_eq!(code, 0);
    let total: u64 = v["dims"].as_object().unwrap().values().map(|d| d.as_u64().unwrap()).sum();
    assert_eq!(total, 2);
}
