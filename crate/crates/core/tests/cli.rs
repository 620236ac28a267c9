use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endoaip")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const Z4: &str = r#"{"ring": {"kind": "cyclic", "n": 4}, "kind": "z_module", "orders": [4]}"#;
const T2: &str = r#"{"kind": "triangular", "base": {"kind": "cyclic", "n": 2}, "k": 2}"#;

#[test]
fn check_reports_failure_with_witness() {
    let dir = TempDir::new().unwrap();
    let z4 = write(&dir, "z4.json", Z4);
    let out = run(&[
        "--json",
        "check",
        z4.to_str().unwrap(),
        "--property",
        "endo_aip",
        "--replay",
    ]);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["property"], "endo_aip");
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"]["kind"], "failure");
    assert_eq!(v["witness"]["submodule"], serde_json::json!([[0], [2]]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("replay: ok"));
}

#[test]
fn check_ring_property_on_a_ring_file() {
    let dir = TempDir::new().unwrap();
    let t2 = write(&dir, "t2.json", T2);
    let path = t2.to_str().unwrap();
    assert_eq!(
        code(&run(&["check", path, "--property", "ring:centrally_aip", "--replay"])),
        1
    );
    assert_eq!(code(&run(&["check", path, "--property", "ring:aip"])), 0);
    assert_eq!(code(&run(&["check", path, "--property", "endo_aip"])), 0);
    let mirrored = run(&["check", path, "--property", "ring:aip", "--orientation", "mirrored"]);
    assert!(matches!(code(&mirrored), 0 | 1));
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"kind": "cyclic"}"#);
    let z4 = write(&dir, "z4.json", Z4);
    let big = write(
        &dir,
        "big.json",
        r#"{"kind": "matrix", "base": {"kind": "cyclic", "n": 4}, "k": 3}"#,
    );
    assert_eq!(
        code(&run(&["check", bad.to_str().unwrap(), "--property", "rickart"])),
        2
    );
    assert_eq!(code(&run(&["check", z4.to_str().unwrap(), "--property", "no_such"])), 2);
    assert_eq!(code(&run(&["check", "/nonexistent.json", "--property", "rickart"])), 2);
    assert_eq!(code(&run(&["describe", big.to_str().unwrap()])), 3);
    assert_eq!(
        code(&run(&[
            "--max-ring",
            "2",
            "check",
            z4.to_str().unwrap(),
            "--property",
            "rickart"
        ])),
        3
    );
}

#[test]
fn describe_prints_summary() {
    let dir = TempDir::new().unwrap();
    let z22 = write(
        &dir,
        "z22.json",
        r#"{"ring": {"kind": "cyclic", "n": 2}, "kind": "z_module", "orders": [2, 2]}"#,
    );
    let out = run(&["--json", "describe", z22.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["module"]["endomorphism_ring_order"], 16);
    assert_eq!(v["module"]["fully_invariant_submodules"], 2);
    let text = run(&["describe", z22.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("uniform dimension: 2"));
}

#[test]
fn separate_and_suite() {
    let out = run(&["separate", "endo_aip", "centrally_endo_aip"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("T2(Z2)_T2(Z2)"));
    assert_eq!(code(&run(&["separate", "centrally_endo_aip", "rickart"])), 1);

    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "corpus.json",
        r#"{"z_cyclic_max": 6, "z_pair_max": 3, "cyclic_ring_max": 4, "rings": [], "free_rank": 0, "random_z_modules": 0}"#,
    );
    let out = run(&[
        "--json",
        "suite",
        "--theorems",
        "HIER,RL",
        "--corpus",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = report["theorems"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["HIER", "RL"]);
    assert_eq!(code(&run(&["suite", "--theorems", "NOPE"])), 2);
}
