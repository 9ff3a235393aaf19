use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn meander(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meander"))
        .args(args)
        .env_remove("MEANDER_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_schema(name: &str, value: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

#[test]
fn classify_figure_one() {
    let v = stdout_json(&meander(&["classify", "--perm", "3,2,1,6,5,4"]));
    assert_eq!(v["irreducible"], true);
    assert_eq!(v["prime"], false);
    assert_schema("classification.schema.json", &v);
}

#[test]
fn bounds_defaults() {
    let v = stdout_json(&meander(&["bounds"]));
    assert!((v["upper_min"].as_f64().unwrap() - 3.33341).abs() < 1e-4);
    assert!((v["lower"].as_f64().unwrap() - 1.83669).abs() < 1e-5);
    assert_schema("bound_report.schema.json", &v);
}

#[test]
fn composition_outputs_match_schemas() {
    let v = stdout_json(&meander(&["concat", "--a", "3,2,1", "--b", "3,2,1"]));
    assert_eq!(v["meander"], serde_json::json!([3, 2, 1, 6, 5, 4]));
    assert_schema("concatenation.schema.json", &v);

    let v = stdout_json(&meander(&["insert", "--host", "1,2,3", "--guest", "1,2", "--pos", "1", "--even"]));
    assert_eq!(v["order"], 5);
    assert_schema("insertion.schema.json", &v);

    let v = stdout_json(&meander(&["construct", "--perm", "1", "--variant", "32"]));
    assert_eq!(v["output"].as_array().unwrap().len(), 34);
    assert_schema("construction.schema.json", &v);

    let v = stdout_json(&meander(&["prime-close", "--perm", "2,1"]));
    assert_eq!(v["branch"], "mirrored");
    assert_schema("prime_closure.schema.json", &v);
}

#[test]
fn count_csv_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.jsonl");
    let out = meander(&[
        "count", "--max-order", "6", "--convention", "even-reversal",
        "--cache", cache.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("order,total,irreducible,prime,irr_ratio"));
    assert!(lines.any(|l| l.starts_with("4,3,")));
    for line in std::fs::read_to_string(&cache).unwrap().lines() {
        assert_schema("cache_record.schema.json", &serde_json::from_str(line).unwrap());
    }
}

#[test]
fn config_file_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("meander.conf");
    std::fs::write(&cfg, "max_order = 3\nconvention = raw\n").unwrap();
    let out = meander(&["count", "--config", cfg.to_str().unwrap(), "--no-classify"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.contains("\n2,2,,,\n"));
    let out = meander(&["count", "--config", cfg.to_str().unwrap(), "--max-order", "4", "--convention", "even-reversal"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("\n4,3,"));
}

#[test]
fn render_into_directory() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&meander(&["render", "--perm", "3,2,1,6,5,4", "--format", "svg", "--out", dir.path().to_str().unwrap()]));
    let path = v["path"].as_str().unwrap();
    assert!(Path::new(path).file_name().unwrap().to_str().unwrap().starts_with("meander_6_"));
    assert!(std::fs::read_to_string(path).unwrap().contains("<svg"));
}

#[test]
fn calibrate_and_corrupted_reference() {
    let v = stdout_json(&meander(&["calibrate", "--max-order", "13"]));
    assert_eq!(v["confirmed"], true);
    assert_schema("convention_report.schema.json", &v);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ref.json");
    let mut reference: Value =
        serde_json::from_str(include_str!("../data/reference_counts.json")).unwrap();
    reference["open"]["10"] = 539.into();
    std::fs::write(&path, reference.to_string()).unwrap();
    let out = meander(&["calibrate", "--max-order", "12", "--reference", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "calibration");
    assert!(err["message"].as_str().unwrap().contains("order 10"));
    assert_schema("error.schema.json", &err);
}

#[test]
fn verify_reports_skips() {
    let out = meander(&["verify", "--max-order", "6", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_schema("verify_report.schema.json", &v);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 13);
    let skipped: Vec<u64> = results
        .iter()
        .filter(|r| r["skipped"] == true)
        .map(|r| r["id"].as_u64().unwrap())
        .collect();
    assert_eq!(skipped, vec![1, 3, 4, 7, 9, 10, 12, 13]);
    // the odd-insert order increment is unattainable, so verify fails
    assert!(!out.status.success());
}

#[test]
fn bad_input_is_reported_as_json() {
    let out = meander(&["classify", "--perm", "1,2,2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "malformed_permutation");

    let out = meander(&["count", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "usage");
}
