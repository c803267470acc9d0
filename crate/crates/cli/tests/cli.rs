use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-strip")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn tableau_counts() {
    assert_eq!(json(&["tableaux", "--inner", "", "--outer", "2,1"])["count"], 2);
    assert_eq!(json(&["tableaux", "--inner", "1", "--outer", "2,1"])["count"], 2);
    let v = json(&["tableaux", "--inner", "2", "--outer", "2"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["tableaux"][0]["boxes"], serde_json::json!([]));
}

#[test]
fn malformed_shape_is_usage_error() {
    assert_eq!(run(&["tableaux", "--inner", "3", "--outer", "2"]).status.code(), Some(2));
    assert_eq!(run(&["tableaux", "--outer", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "--outer", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn matrix_examples() {
    let v = json(&["matrix", "--inner", "", "--outer", "3", "--gen", "1"]);
    assert_eq!(v["display"], serde_json::json!([["a"]]));

    // basis T0 = 12/3 has 3 in the lower-content box, so it is T₋ for g2
    let v = json(&["matrix", "--inner", "", "--outer", "2,1", "--gen", "2"]);
    assert_eq!(
        v["display"],
        serde_json::json!([["-a^-1/(a^2 + 1)", "1"], ["(a^4 + a^2 + 1)/(a^4 + 2*a^2 + 1)", "a^3/(a^2 + 1)"]])
    );

    let v = json(&["matrix", "--inner", "", "--outer", "2,1", "--gen", "1", "--at", "1"]);
    assert_eq!(v["display"], serde_json::json!([["1", "0"], ["0", "-1"]]));
    assert_eq!(v["matrix"]["entries"], serde_json::json!([["1", "0"], ["0", "-1"]]));
}

#[test]
fn matrix_errors() {
    assert_eq!(run(&["matrix", "--outer", "2,1", "--gen", "3"]).status.code(), Some(2));
    assert_eq!(run(&["matrix", "--outer", "2,1", "--gen", "0"]).status.code(), Some(2));
    // a^2 + 1 never vanishes over Q, but a = 0 is outside the domain
    assert_eq!(run(&["matrix", "--outer", "2,1", "--gen", "2", "--at", "0"]).status.code(), Some(2));
}

#[test]
fn invariant_dimensions() {
    let v = json(&["invariants", "--outer", "3"]);
    assert_eq!(v["invariant_dimension"], 1);
    assert_eq!(v["vector"], serde_json::json!(["1"]));
    assert_eq!(json(&["invariants", "--outer", "1,1"])["invariant_dimension"], 0);
    // (1,2) and (2,2) share a column, so this is not a horizontal strip
    let v = json(&["invariants", "--inner", "1", "--outer", "2,2"]);
    assert_eq!(v["horizontal_strip"], false);
    assert_eq!(v["invariant_dimension"], 0);
    assert_eq!(json(&["invariants", "--inner", "2", "--outer", "3,1"])["invariant_dimension"], 1);
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "morita", "--max-size", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["cocycles_checked"].as_u64().unwrap() > 0);

    let v = json(&["verify", "relations", "--max-size", "5"]);
    assert_eq!(v["pass"], true);

    let v = json(&["verify", "wedderburn", "--n", "3"]);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["sum_of_squares"], 6);
}

#[test]
fn output_is_deterministic_and_file_output_works() {
    let args = ["verify", "invariants", "--max-size", "5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);

    let dir = std::env::temp_dir().join(format!("hecke-strip-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["verify", "invariants", "--max-size", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_cap_is_respected_and_validated() {
    let capped = Command::new(env!("CARGO_BIN_EXE_hecke-strip"))
        .args(["verify", "invariants", "--max-size", "4"])
        .env("HECKE_STRIP_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(0));
    assert_eq!(capped.stdout, run(&["verify", "invariants", "--max-size", "4"]).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_hecke-strip"))
        .args(["tableaux", "--outer", "1"])
        .env("HECKE_STRIP_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn wedderburn_lift_roundtrip_output() {
    let v = json(&["wedderburn-lift", "--n", "2", "--outer", "2", "--row", "1", "--col", "1"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(run(&["wedderburn-lift", "--n", "2", "--outer", "2", "--row", "2"]).status.code(), Some(2));
    assert_eq!(run(&["wedderburn-lift", "--n", "5", "--outer", "5"]).status.code(), Some(2));
}

#[test]
fn pretty_output_is_text() {
    let out = run(&["tableaux", "--outer", "2,1", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("(2,1)/∅: 2 tableaux"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
