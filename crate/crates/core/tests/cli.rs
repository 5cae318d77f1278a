use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_distsurf")).args(args).output().unwrap();
    let v = serde_json::from_slice(&o.stdout).unwrap();
    (o.status.code().unwrap(), v, String::from_utf8(o.stderr).unwrap())
}

#[test]
fn verify_reports_counterexample() {
    let (code, v, _) = run(&["verify", &fixture("diagonal.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["rational"], false);
    assert_eq!(v["payload"]["counterexample"]["dist2"]["a"], "2/1");
    let (_, v, _) = run(&["verify", &fixture("triangle.json")]);
    assert_eq!(v["payload"]["rational"], true);
}

#[test]
fn decimals_are_errors_with_context() {
    let (code, v, err) = run(&["verify", &fixture("decimal.json")]);
    assert_eq!(code, 1);
    let msg = v["payload"]["error"].as_str().unwrap();
    assert!(msg.contains("points[1].x.a"), "{msg}");
    assert!(!err.is_empty());
}

#[test]
fn normalize_triangle() {
    let (code, v, _) = run(&["normalize", &fixture("triangle.json"), "--anchors", "1,2"]);
    assert_eq!(code, 0);
    let pts = v["payload"]["set"]["points"].as_array().unwrap();
    assert_eq!(pts[1]["x"]["a"], "0/1");
    assert_eq!(pts[2]["x"]["a"], "1/1");
}

#[test]
fn surface_golden_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.txt");
    let (code, v, _) = run(&["surface", &fixture("two.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["projective_degree"], 4);
    assert_eq!(std::fs::read_to_string(out).unwrap(), include_str!("golden/two_points.txt"));
}

#[test]
fn certify_embeds_input_hash() {
    let path = fixture("six.json");
    let (code, v, _) = run(&["certify", &path]);
    assert_eq!(code, 0);
    let want = distsurf::io::sha256_hex(&std::fs::read(&path).unwrap());
    assert_eq!(v["payload"]["input_sha256"], want.as_str());
    assert_eq!(v["payload"]["certificate"]["canonical_pullback_class"], serde_json::json!([1, 1]));
    let (code, v, _) = run(&["certify", &fixture("collinear.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["payload"]["reason"], "collinear");
}

#[test]
fn bad_thread_count_is_an_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_distsurf"))
        .args(["verify", &fixture("triangle.json")])
        .env("RD_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
