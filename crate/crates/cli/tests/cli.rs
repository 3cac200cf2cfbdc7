use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fracsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracsum")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    let _ = std::fs::remove_file(&p);
    p
}

#[test]
fn check_six_ones_is_finite() {
    let out = fracsum(&["check", "--d", "6", "--ks", "1,1,1,1,1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    for c in ["SS", "STAR", "anisotropy"] {
        assert_eq!(v[c]["holds"], true, "{c}");
    }
    assert_eq!(v["monodromy_finite"], true);
    assert!(v["notes"][0].as_str().unwrap().contains("n = 2 only"));
}

#[test]
fn check_reports_failure_without_mismatch() {
    let out = fracsum(&["check", "--d", "7", "--ks", "1,2,4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["monodromy_finite"], false);
    assert_eq!(v["criteria_agree"], true);
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn enumerate_n5_is_empty() {
    let out = fracsum(&["enumerate", "--n", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["class_count"], 0);
    assert_eq!(v["tables"][0]["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn enumerate_n3_lists_two_classes() {
    let out = fracsum(&["enumerate", "--n", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d,canonical,orbit size,members");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("6,\"(6;1,1,1,1)\""));
}

#[test]
fn table1_markdown_has_fourteen_rows() {
    let out = fracsum(&["tables", "--which", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| d | mu1 | mu2 | mu3 | k1/d | k2/d | k3/d | lambda | mu | nu |"));
    assert!(text.contains("| 60 | 4/5 | 2/3 | 1/2 | 11/60 | 19/60 | 29/60 | 1/2 | 1/3 | 1/5 |"));
    let rows = text.lines().filter(|l| l.starts_with("| ") && l.chars().nth(2).unwrap().is_ascii_digit()).count();
    assert_eq!(rows, 14);
}

#[test]
fn table4_reports_diff_and_winner() {
    let out = fracsum(&["tables", "--which", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["winners"], serde_json::json!(["(6;1,1,2,1)"]));
    assert_eq!(v["only_printed"], serde_json::json!(["(30;3,3,17,7)", "(30;9,29,6,1)"]));
}

#[test]
fn table3_has_no_candidates_at_120() {
    let v = json(&fracsum(&["tables", "--which", "3", "--format", "json"]));
    assert!(v["moduli_without_candidates"].as_array().unwrap().contains(&Value::from(120)));
    assert_eq!(v["matches_printed"], true);
}

#[test]
fn output_file_and_determinism() {
    let a = scratch("t2a.csv");
    let b = scratch("t2b.csv");
    for p in [&a, &b] {
        let out = fracsum(&["tables", "--which", "2", "--format", "csv", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert!(String::from_utf8(x).unwrap().starts_with("d,tuples,multiplicity\n6,"));
}

#[test]
fn usage_errors_exit_2_and_write_nothing() {
    let p = scratch("never.json");
    let cases: [&[&str]; 6] = [
        &["check", "--d", "1", "--ks", "1,1,1"],
        &["check", "--d", "6", "--ks", "1,6,1"],
        &["check", "--d", "6", "--ks", "1,1,1", "--cap", "10"],
        &["tables", "--which", "7"],
        &["oracle", "--d", "6", "--ks", "1,1,1,1"],
        &["enumerate"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--out", p.to_str().unwrap()]);
        let out = fracsum(&full);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!p.exists(), "{args:?}");
    }
}

#[test]
fn oracle_single_triple() {
    let out = fracsum(&["oracle", "--d", "10", "--ks", "3,3,3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["mismatches"], 0);
    assert!(v["tables"][0]["rows"][0]["closure"].as_str().unwrap().starts_with("finite"));
}
