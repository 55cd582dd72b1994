//! End-to-end checks of the binary: exit codes, pinned JSON shapes, and
//! byte-for-byte determinism of stdout and the JSON files.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delta2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn gcoeff_prints_the_golden_expansion() {
    let out = run(&["gcoeff", "--lambda", "1,1,1,1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("[2]+[3]+2[4]+[5]+[6]+qt(1+[2]+[3])"), "{text}");
    assert!(text.contains("\"positive\":true"), "{text}");
}

#[test]
fn gcoeff_zero_for_wide_shapes() {
    let out = run(&["gcoeff", "--lambda", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("polynomial: 0"), "{text}");
    assert!(text.contains("{\"terms\":[]}"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gcoeff", "--lambda", "1,2"][..],
        &["gcoeff", "--lambda", "0"][..],
        &["check-specializations", "--n", "4", "--samples", "1"][..],
        &["no-such-command"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn stdout_and_json_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.json");
    let path_b = dir.path().join("b.json");
    let out_a = run(&["gcoeff", "--lambda", "3,2,1", "--json", path_a.to_str().unwrap()]);
    let out_b = run(&["gcoeff", "--lambda", "3,2,1", "--json", path_b.to_str().unwrap()]);
    assert!(out_a.status.success() && out_b.status.success());
    assert_eq!(out_a.stdout, out_b.stdout);
    assert_eq!(
        std::fs::read(&path_a).unwrap(),
        std::fs::read(&path_b).unwrap()
    );
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gcoeff_json_document_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = run(&["gcoeff", "--lambda", "1,1", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let doc = read_json(&path);
    assert_eq!(doc["lambda"], serde_json::json!([1, 1]));
    // g_(1,1) = q + t
    assert_eq!(
        doc["polynomial"]["terms"],
        serde_json::json!([
            {"c": "1", "q": 0, "t": 1},
            {"c": "1", "q": 1, "t": 0},
        ])
    );
    assert_eq!(
        doc["certificate"]["entries"],
        serde_json::json!([{"length": 2, "mult": "1", "shift": 0}])
    );
    assert_eq!(doc["certificate"]["positive"], serde_json::json!(true));
}

#[test]
fn injection_json_lists_classes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inj.json");
    let out = run(&[
        "verify",
        "injection",
        "--lambda",
        "1,1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = read_json(&path);
    // shape (2): hat-carrying classes (0,0), (1,0), (2,0), (0,1);
    // the single leftover is the barred filling in class (2,0)
    assert_eq!(
        doc,
        serde_json::json!({"classes": [
            {"t": 0, "q": 0, "count": 1, "leftover": 0},
            {"t": 0, "q": 1, "count": 1, "leftover": 0},
            {"t": 1, "q": 0, "count": 1, "leftover": 0},
            {"t": 2, "q": 0, "count": 1, "leftover": 1},
        ]})
    );
}

#[test]
fn verify_all_small_passes() {
    let out = run(&[
        "verify",
        "all",
        "--max-n",
        "5",
        "--series-degree",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("verify all: PASS"), "{text}");
    assert!(!text.contains("[FAIL]"), "{text}");
}

#[test]
fn verify_recursion_and_series_pass() {
    let out = run(&["verify", "recursion", "--max-n", "6"]);
    assert!(out.status.success());
    let out = run(&["verify", "series", "--degree", "3"]);
    assert!(out.status.success());
}

#[test]
fn delta3_probe_passes() {
    let out = run(&["delta3", "--lambda", "2,1,1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("value at q = t = 1"), "{text}");
}
