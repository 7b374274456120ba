use std::process::{Command, Output};

use serde_json::Value;

fn glsigma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glsigma")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn counts_over_a_range() {
    let out = glsigma(&["counts", "--n", "2..5", "--q", "5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["q"], 5);
    assert_eq!(v["counts"], serde_json::json!({"2": 8, "3": 16, "4": 54, "5": 104}));
}

#[test]
fn chars_and_classes_agree_in_number() {
    for n in ["2", "3", "4"] {
        let c = json(&glsigma(&["chars", "--n", n, "--q", "9"]));
        let k = glsigma(&["classes", "--n", n, "--q", "9"]);
        assert!(k.status.success(), "class sizes should sum to the group order");
        assert_eq!(c["count"], json(&k)["count"]);
    }
}

#[test]
fn table_csv_and_orthogonality_line() {
    let out = glsigma(&["table", "--n", "2", "--q", "9", "--format", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("orthogonality: pass"));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("character,C1,C2,C3,C4,C5,C6"));
    assert_eq!(csv.lines().count(), 1 + 12);
}

#[test]
fn oracle_reports_matched_rows() {
    let out = glsigma(&["oracle", "--n", "2", "--q", "5", "--kind", "sigma-prime"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("matched 8/8 rows"));
    assert_eq!(json(&out)["group_order"], 960);
}

#[test]
fn output_is_deterministic() {
    let a = glsigma(&["wcosets", "--seed", "11", "--count", "40"]);
    let b = glsigma(&["wcosets", "--seed", "11", "--count", "40"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let t1 = glsigma(&["table", "--n", "3", "--q", "5"]);
    let t2 = glsigma(&["table", "--n", "3", "--q", "5"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn writes_to_output_file() {
    let dir = std::env::temp_dir().join(format!("glsigma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chars.json");
    let out = glsigma(&["chars", "--n", "3", "--q", "5", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 16);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn failures_exit_nonzero() {
    let bad_q = glsigma(&["table", "--n", "2", "--q", "7"]);
    assert!(!bad_q.status.success());
    assert!(String::from_utf8_lossy(&bad_q.stderr).contains("q=7"));

    let range = glsigma(&["chars", "--n", "2..3"]);
    assert!(!range.status.success());

    let big = glsigma(&["oracle", "--n", "3"]);
    assert!(!big.status.success());
}

#[test]
fn budget_errors_show_the_bound() {
    let out = Command::new(env!("CARGO_BIN_EXE_glsigma"))
        .args(["oracle", "--n", "2", "--q", "5"])
        .env("GLSIGMA_BUDGET", "100")
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("960") && err.contains("100"), "{err}");
}
