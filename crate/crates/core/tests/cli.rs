use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn vkf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vkf")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vkf-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn fixture_then_compute() {
    let out = vkf(&["fixture", "--name", "moment-curve", "--dim", "3", "--points", "6"]);
    assert!(out.status.success());
    let path = scratch("k6.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = vkf(&["compute", "--input", path.to_str().unwrap(), "--invariant", "c", "--verbose"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["c"], 1);
    assert!(v["linkedPairs"].as_array().is_some_and(|a| a.len() % 2 == 1));
    assert!(v.get("configuration").is_some());
}

#[test]
fn k5_skeleton_crossings() {
    let out = vkf(&["fixture", "--name", "moment-curve", "--dim", "2", "--points", "5"]);
    let path = scratch("k5.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = vkf(&["compute", "--input", path.to_str().unwrap(), "--invariant", "v-skeleton", "--skeleton", "1", "--verbose"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["v"], 1);
    assert_eq!(v["crossingPairs"].as_array().unwrap().len(), 5);
}

#[test]
fn three_points_on_a_line() {
    let path = scratch("line.json", r#"{"dim": 1, "points": [["0"], ["1/2"], ["3"]]}"#);
    let out = vkf(&["compute", "--input", path.to_str().unwrap(), "--invariant", "v"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out), json!({"v": 1}));
}

#[test]
fn linking_number_on_k6() {
    let out = vkf(&["fixture", "--name", "moment-curve", "--dim", "3", "--points", "6"]);
    let path = scratch("k6-lk.json", std::str::from_utf8(&out.stdout).unwrap());
    let p = path.to_str().unwrap();
    let a = stdout_json(&vkf(&["compute", "--input", p, "--invariant", "lk", "--sigma", "0,2,4", "--tau", "1,3,5"]));
    let b = stdout_json(&vkf(&["compute", "--input", p, "--invariant", "lk", "--sigma", "1,3,5", "--tau", "0,2,4"]));
    assert_eq!(a, b);
    assert!(a["lk"] == 0 || a["lk"] == 1);
}

#[test]
fn bad_inputs_exit_2() {
    for text in [
        "not json",
        r#"{"dim": 1, "points": [[0], [1], [3]]}"#,
        r#"{"dim": 1, "points": [["0"], ["1 /2"], ["3"]]}"#,
        r#"{"dim": 1}"#,
        r#"{"dim": 1, "points": [["0"]], "vectors": [["1"]]}"#,
        r#"{"dim": 1, "points": [["0"], ["1"], ["1"]]}"#,
    ] {
        let path = scratch("bad.json", text);
        let out = vkf(&["compute", "--input", path.to_str().unwrap(), "--invariant", "v"]);
        assert_eq!(out.status.code(), Some(2), "{text}");
    }
    assert_eq!(vkf(&["fixture", "--name", "nope", "--dim", "2", "--points", "5"]).status.code(), Some(2));
}

#[test]
fn degenerate_error_names_vertices() {
    let path = scratch("degen.json", r#"{"dim": 2, "points": [["0","0"], ["1","1"], ["2","2"], ["0","5"]]}"#);
    let out = vkf(&["compute", "--input", path.to_str().unwrap(), "--invariant", "v"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('0') && err.contains('1') && err.contains('2'), "{err}");
}

#[test]
fn sample_is_reproducible_and_capped() {
    let a = vkf(&["sample", "--dim", "2", "--points", "5", "--seed", "7"]);
    let b = vkf(&["sample", "--dim", "2", "--points", "5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["points"].as_array().unwrap().len(), 5);
    // Four distinct points from {-1, 0, 1} cannot exist.
    assert_eq!(vkf(&["sample", "--dim", "1", "--points", "4", "--seed", "7", "--bound", "1"]).status.code(), Some(3));
}

#[test]
fn verify_writes_report() {
    let dir = std::env::temp_dir().join(format!("vkf-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = vkf(&[
        "verify", "--statement", "tr-plus", "--dim", "2", "--trials", "25", "--seed", "11", "--workers", "2", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    for key in ["statement", "dim", "trials", "seed", "bound", "aggregatePass", "failures", "summary"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["aggregatePass"], true);
    assert_eq!(report["summary"]["trialsPassed"], 25);
    assert!(report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_rejects_unsupported_dimension() {
    let out = vkf(&["verify", "--statement", "footnote-even", "--dim", "2", "--trials", "1", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
