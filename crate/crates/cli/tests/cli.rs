use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn qcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_inline_buhler() {
    let out = qcurve(&["analyze", "--b", "4", "--c", "16/5", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rec = &v["records"][0];
    assert_eq!(rec["t"], "1");
    assert_eq!(rec["hypothesis"], true);
    assert_eq!(rec["disc"], "589824");
    assert_eq!(v["report"]["status"], "pass");
}

#[test]
fn analyze_file_keeps_order_and_reports_degenerate_records() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, r#"{{"label":"buhler","B":"4","C":"16/5"}}"#).unwrap();
    writeln!(f, r#"{{"label":"original","B":"20","C":"-16"}}"#).unwrap();
    writeln!(f).unwrap();
    writeln!(f, r#"{{"label":"zero","B":"1","C":"0"}}"#).unwrap();
    writeln!(f, r#"{{"label":"general","A":"1","B":"2","C":"3"}}"#).unwrap();
    let out = qcurve(&["analyze", "--file", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let recs = v["records"].as_array().unwrap();
    let labels: Vec<_> = recs.iter().map(|r| r["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["buhler", "original", "zero", "general"]);
    assert_eq!(recs[1]["t"], "3/5");
    assert_eq!(recs[1]["hypothesis"], false);
    assert!(recs[2]["errors"][0].as_str().unwrap().contains("C must be nonzero for t"));
    assert_eq!(v["report"]["checks"][2]["status"], "skipped");
    assert_eq!(recs[3]["t"], Value::Null);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(qcurve(&["analyze", "--b", "0.5", "--c", "1"]).status.code(), Some(2));
    assert_eq!(qcurve(&["analyze", "--b", "1"]).status.code(), Some(2));
    assert_eq!(qcurve(&["analyze", "--file", "/nonexistent/q.jsonl"]).status.code(), Some(2));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, r#"{{"B":"4","C":"16/5"}}"#).unwrap();
    writeln!(f, "{{").unwrap();
    assert_eq!(qcurve(&["analyze", "--file", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(qcurve(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_two() {
    let out = qcurve(&["verify", "modular"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn table_reproduces_parameters() {
    let out = qcurve(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    assert!(checks[0]["witness"].as_str().unwrap().contains("recomputed 3/5, 15/11"));
}

#[test]
fn verify_repn_and_hecke_pass() {
    for suite in ["repn", "hecke", "localfield"] {
        let out = qcurve(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert_eq!(json(&out)["status"], "pass");
    }
}

#[test]
fn verify_qcurve_is_byte_stable() {
    let args = ["verify", "qcurve", "--samples", "20", "--seed", "7", "--height", "200"];
    let a = qcurve(&args);
    let b = qcurve(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["options"]["samples"], "20");
    assert_eq!(v["options"]["height"], "200");
    assert_eq!(v.get("wall_time_ms"), None);
}

#[test]
fn out_path_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qcurve(&["table", "--timing", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn failing_suite_exits_one() {
    let out = qcurve(&["verify", "klein-link"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    for c in v["checks"].as_array().unwrap() {
        let negated = c["id"].as_str().unwrap().ends_with("-negated");
        assert_eq!(c["status"], if negated { "pass" } else { "fail" }, "{c}");
    }
}
