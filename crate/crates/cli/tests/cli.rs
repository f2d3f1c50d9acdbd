use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent-verify"))
        .args(args)
        .env_remove("DESCENT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let json = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (json, out.status.code().unwrap())
}

fn claim<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["claims"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap_or_else(|| panic!("no claim {id}"))
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn sequence_two_three_dimensions() {
    let (r, code) = report(&["run", "sequence", "--case", "k=2,p=3"]);
    assert_eq!(code, 0);
    assert_eq!(claim(&r, "sequence/k=2,p=3/dims")["computed"], serde_json::json!([120, 135, 15]));
    assert_eq!(claim(&r, "sequence/k=2,p=3/kernel-is-lie")["pass"], true);
    assert_eq!(r["summary"]["pass"], true);
}

#[test]
fn idempotents_of_degree_two_in_characteristic_three() {
    let (r, code) = report(&["run", "idempotents", "--case", "n=2,p=3"]);
    assert_eq!(code, 0);
    assert_eq!(claim(&r, "idempotents/n=2,field=3/count")["computed"], 2);
    assert_eq!(claim(&r, "idempotents/n=2,field=3/invariants")["computed"], "ok");
}

#[test]
fn descent_degree_one_passes() {
    let (r, code) = report(&["run", "descent", "--case", "n=1"]);
    assert_eq!(code, 0);
    assert_eq!(claim(&r, "descent/n=1,field=Z/basis-size")["computed"], 1);
    assert!(r["summary"]["claims"].as_u64().unwrap() > 0);
}

#[test]
fn characters_at_three() {
    let (r, code) = report(&["run", "characters"]);
    assert_eq!(code, 0);
    assert_eq!(claim(&r, "characters/p=3/spl2/dimension")["computed"], "15");
    assert_eq!(claim(&r, "characters/p=3/abacus/example-label")["computed"], "<1,3>");
}

#[test]
fn cache_build_validate_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = run(&["cache", "build", "--cache-dir", d, "--case", "n=4,p=3"]);
    assert!(out.status.success());
    let file = dir.path().join("4-3.idem");
    assert!(file.exists());

    let out = run(&["cache", "validate", "--cache-dir", d]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ok 4-3.idem"));

    // a run reuses the stored system
    let (r, code) = report(&["run", "idempotents", "--case", "n=4,p=3", "--cache-dir", d]);
    assert_eq!((code, &r["summary"]["pass"]), (0, &Value::Bool(true)));

    corrupt_first_coefficient(&file);
    let out = run(&["cache", "validate", "--cache-dir", d]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL 4-3.idem"), "{text}");
    assert!(text.contains("e² = e"), "{text}");

    let (r, code) = report(&["run", "idempotents", "--case", "n=4,p=3", "--cache-dir", d]);
    assert_eq!(code, 1);
    assert_eq!(claim(&r, "idempotents/n=4,field=3/cache")["pass"], false);
}

/// Replaces the first coefficient of the first idempotent by another nonzero residue mod 3.
fn corrupt_first_coefficient(path: &Path) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let (comp, value) = lines[2].split_once('\t').unwrap();
    let changed = if value == "1" { "2" } else { "1" };
    lines[2] = format!("{comp}\t{changed}");
    fs::write(path, lines.join("\n") + "\n").unwrap();
}

#[test]
fn clear_empty_directory_is_a_no_op() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["cache", "clear", "--cache-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
}

#[test]
fn clear_missing_directory_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent");
    let out = run(&["cache", "clear", "--cache-dir", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, workers) in [(&a, "1"), (&b, "3")] {
        let out = run(&[
            "run",
            "all",
            "--case",
            "n=3",
            "--case",
            "n=4,p=2",
            "--case",
            "k=1,p=3",
            "--workers",
            workers,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let r: Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    let ids: Vec<&str> = r["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(r["claims"][0].get("elapsed_ms").is_none());
}

#[test]
fn timings_are_opt_in() {
    let (r, _) = report(&["run", "descent", "--case", "n=2", "--timings"]);
    assert!(r["claims"][0]["elapsed_ms"].is_u64());
}

#[test]
fn capacity_and_usage_errors_exit_with_two() {
    for args in [
        &["run", "all", "--max-n", "8"][..],
        &["run", "descent", "--case", "n=8"],
        &["run", "sequence", "--case", "k=3,p=3"],
        &["run", "idempotents", "--case", "n=4"],
        &["run", "idempotents", "--case", "n=4,p=4"],
        &["run", "descent", "--case", "n=4,p=5", "--field", "3"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
