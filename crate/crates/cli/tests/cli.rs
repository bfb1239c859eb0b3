use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn catpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catpow")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn s3_gset() -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("s3_natural.gset");
    std::fs::write(&path, "gset\n# S3 on three points\n1 0 2\n1 2 0\n").unwrap();
    path
}

#[test]
fn strict_partitions_of_ten() {
    let out = catpow(&["partitions", "--n", "10", "--kind", "strict"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["partitions"].as_array().unwrap().len(), 10);
    assert_eq!(v["count"], "10");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(catpow(&["partitions", "--n", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(catpow(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn caps_are_rejected_before_computation() {
    assert_eq!(catpow(&["cocycle", "--n", "8"]).status.code(), Some(2));
    assert_eq!(catpow(&["koszul", "--n", "9", "--verify-homotopy"]).status.code(), Some(2));
    assert_eq!(catpow(&["kdim", "sym", "--n", "31"]).status.code(), Some(2));
    assert_eq!(catpow(&["regular-classes", "--n", "8", "--mode", "brute"]).status.code(), Some(2));
}

#[test]
fn quick_selftest_passes() {
    let out = catpow(&["selftest", "--level", "quick"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn verification_failure_exits_one() {
    let out = catpow(&["koszul", "--n", "2", "--verify-homotopy", "--convention", "left-literal"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn cocycle_verification() {
    let out = catpow(&["cocycle", "--n", "4", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verification"]["passed"], true);
    assert_eq!(v["verification"]["rewriting_table_agrees"], true);
    let out = catpow(&["cocycle", "--n", "6", "--verify", "--samples", "2000", "--seed", "5"]);
    assert_eq!(json(&out)["verification"]["method"], "sampled");
}

#[test]
fn regular_classes_of_s4() {
    let v = json(&catpow(&["regular-classes", "--n", "4", "--mode", "brute"]));
    let regular: Vec<&str> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["regular"] == true)
        .map(|c| c["cycle_type"].as_str().unwrap())
        .collect();
    assert_eq!(regular, ["(4)", "(3,1)", "(1,1,1,1)"]);
    assert_eq!(v["irreducible_counts"]["even"], 1);
    assert_eq!(v["irreducible_counts"]["odd"], 1);
}

#[test]
fn sign_two_character_of_s2() {
    let v = json(&catpow(&["two-char", "--rep", "sign:n=2"]));
    let entry = v["table"].as_array().unwrap().iter().find(|e| e["g"] == "(0 1)" && e["h"] == "(0 1)").unwrap();
    assert_eq!(entry["value"]["even"], 0);
    assert_eq!(entry["value"]["odd"], -1);
}

#[test]
fn power_series_with_oracle() {
    let path = s3_gset();
    let path = path.to_str().unwrap();
    for kind in ["sym", "ext"] {
        let out = catpow(&["power", kind, "--gset", path, "--g", "(0 1)", "--h", "(0 1)", "--order", "6", "--oracle-check"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["oracle"]["passed"], true);
    }
    let out = catpow(&["power", "sym", "--gset", path, "--g", "(0 1)", "--h", "(1 2)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = catpow(&["--threads", "1", "two-char", "--rep", "sign:n=5"]);
    let b = catpow(&["--threads", "4", "two-char", "--rep", "sign:n=5"]);
    assert_eq!(a.stdout, b.stdout);
    let a = catpow(&["koszul", "--n", "5", "--seed", "3", "--format", "tsv"]);
    let b = catpow(&["koszul", "--n", "5", "--seed", "3", "--format", "tsv"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tsv_is_a_projection() {
    let out = catpow(&["kdim", "ext", "--n", "4", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n\td0\td1\tsdim");
    assert_eq!(lines[5], "4\t1\t1\t0");
}
