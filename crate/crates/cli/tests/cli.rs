//! End-to-end checks of the installed binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_svtcrystal"))
}

#[test]
fn count_only_summary() {
    let out = bin().args(["enumerate", "--shape", "2,1", "--n", "3", "--count-only"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "shape 2,1, n = 3: 27 tableaux, 7 components");
}

#[test]
fn appendix_values_are_byte_stable() {
    let run = || {
        let out = bin().args(["reproduce", "appendix-a"]).output().unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let first = run();
    assert!(first.contains(
        "DL(x1^3*x2, 1) = q*x1^3*x2^2 + q*x1^2*x2^3 + x1^3*x2 + x1^2*x2^2 + x1*x2^3"
    ));
    assert!(first.contains("DL(x1^3*x2, 3) = x1^3*x2"));
    assert_eq!(first, run());
}

#[test]
fn k_edges_rejected_for_general_shapes() {
    let out = bin()
        .args(["crystal-graph", "--shape", "2,1", "--n", "3", "--k-edges"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    let record: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert!(record["error"].as_str().unwrap().contains("single-row"));
}

#[test]
fn hecke_insert_reports_factorization() {
    let out = bin().args(["hecke", "insert", "1 1 2 / 2 1 1"]).output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["factorization"], "(2 1)(1)");
    assert_eq!(value["p"], serde_json::json!([[1, 2]]));
}

#[test]
fn verify_suite_reports_pass() {
    let out = bin().args(["verify", "kjdt"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kjdt: pass"));
    assert!(text.contains("88/91"));
}

#[test]
fn kdemazure_text_output() {
    let out = bin()
        .args(["kdemazure", "--shape", "row:2", "--n", "3", "--word", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("5 nodes:"));
    assert!(text.contains("character: x2^2 + x1*x2 + x1^2 + b*x1*x2^2 + b*x1^2*x2"));
}

#[test]
fn out_dir_env_is_honored() {
    let dir = std::env::temp_dir().join(format!("svtcrystal-test-{}", std::process::id()));
    let out = bin()
        .env("SVTCRYSTAL_OUT", &dir)
        .args(["reproduce", "figure-2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.join("figure-2.dot")).unwrap();
    assert!(dot.contains("style=dashed"));
    let _ = std::fs::remove_dir_all(&dir);
}
