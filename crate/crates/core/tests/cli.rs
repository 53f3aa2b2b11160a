//! Binary-level checks of the command-line interface: output formats,
//! exit codes, and byte stability of certificate files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_sosrank")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sosrank-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn macaulay_json_output() {
    let out = run(&["macaulay", "--N", "5", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["N"], 5);
    assert_eq!(doc["d"], 2);
    assert_eq!(doc["step"], 7);
    assert_eq!(doc["terms"], serde_json::json!([[3, 2], [2, 1]]));
}

#[test]
fn basis_formats() {
    let out = run(&["basis", "--n", "3", "--d", "2"]);
    assert_eq!(
        stdout(&out).trim(),
        "[[2,0,0],[1,1,0],[1,0,1],[0,2,0],[0,1,1],[0,0,2]]"
    );
    let out = run(&["basis", "--n", "2", "--d", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "1,0\n0,1\n");
}

#[test]
fn matrix_triplet_output() {
    let out = run(&["matrix", "--n", "2", "--d", "1", "--check-recursive"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3 2 4\n0 0 1\n1 0 1\n1 1 1\n2 1 1\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("recursive check: ok"));

    let dense = run(&["matrix", "--n", "2", "--d", "1", "--format", "dense"]);
    assert_eq!(stdout(&dense), "1 0\n1 1\n0 1\n");
}

#[test]
fn bands_output() {
    let out = run(&["bands", "--n", "6"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["kappa0"], 2);
    assert_eq!(doc["threshold"], 14);
    assert_eq!(doc["bands"], serde_json::json!([[0, 0], [6, 6], [11, 12]]));
}

#[test]
fn shadow_roundtrip() {
    let out = run(&["shadow", "--space", "[[2,0,0]]"]);
    assert_eq!(stdout(&out).trim(), "[[3,0,0],[2,1,0],[2,0,1]]");
    // Empty space needs explicit dimensions.
    let out = run(&["shadow", "--space", "[]"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["shadow", "--space", "[]", "--n", "3", "--d", "2"]);
    assert_eq!(stdout(&out).trim(), "[]");
}

#[test]
fn certify_from_file() {
    let dir = tmpdir("certify");
    let input = dir.join("f.json");
    std::fs::write(
        &input,
        r#"{"n":3,"parts":[{"d":2,"coeffs":["1","-1","2","1","-1","1"]}]}"#,
    )
    .unwrap();
    let out = run(&["certify", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["total_rank"], 5);
    assert_eq!(doc["is_sos"], false);
    assert_eq!(doc["prolong_sos"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn certify_accepts_decimal_and_fraction_strings() {
    let dir = tmpdir("certify-rat");
    let input = dir.join("half.json");
    std::fs::write(
        &input,
        r#"{"n":2,"parts":[{"d":2,"coeffs":["0.5","-1/2","1"]}]}"#,
    )
    .unwrap();
    let out = run(&["certify", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn examples_by_name() {
    let out = run(&["examples", "g", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("total,false,true,8"));
    let out = run(&["examples", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rnd_certificates_are_byte_stable() {
    let dir = tmpdir("rnd");
    let out1 = dir.join("a.json");
    let out2 = dir.join("b.json");
    let run1 = run(&["rnd", "--n", "2", "--d", "2", "--out", out1.to_str().unwrap()]);
    let run2 = run(&["rnd", "--n", "2", "--d", "2", "--out", out2.to_str().unwrap()]);
    assert_eq!(run1.status.code(), Some(0));
    assert_eq!(run2.status.code(), Some(0));
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert!(!a.is_empty() && a == b);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rnd_uses_and_fills_cache() {
    let dir = tmpdir("rnd-cache");
    let cache = dir.join("cache.json");
    let out = dir.join("cert.json");
    let first = run(&[
        "--cache",
        cache.to_str().unwrap(),
        "rnd",
        "--n",
        "2",
        "--d",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(first.status.code(), Some(0));
    assert!(cache.exists());
    let second = run(&[
        "--cache",
        cache.to_str().unwrap(),
        "rnd",
        "--n",
        "2",
        "--d",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(second.status.code(), Some(0));
    assert!(stdout(&second).contains("(cache)"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rnd_budget_exhaustion_exits_three() {
    let dir = tmpdir("rnd-budget");
    let out = dir.join("cert.json");
    let cache = dir.join("cache.json");
    let run_out = run(&[
        "--cache",
        cache.to_str().unwrap(),
        "rnd",
        "--n",
        "5",
        "--d",
        "2",
        "--budget-nodes",
        "50",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run_out.status.code(), Some(3));
    assert!(stdout(&run_out).contains("incomplete"));
    // Brackets are budget-dependent and must not be cached.
    if cache.exists() {
        let text = std::fs::read_to_string(&cache).unwrap();
        assert!(!text.contains("\"5,2\""), "incomplete result was cached");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_lemmas_runs_clean() {
    let dir = tmpdir("lemmas");
    let report = dir.join("report.json");
    let out = run(&[
        "verify-lemmas",
        "--lemma",
        "first-prolongation",
        "--trials",
        "50",
        "--n-max",
        "3",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations=0"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc[0]["violations"], 0);

    let bad = run(&["verify-lemmas", "--lemma", "no-such-lemma", "--trials", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reproduce_under_tiny_budget_keeps_bracket_rows_passing() {
    // The exact cells resolve through their floors without exploring nodes,
    // so a starved budget only widens the (5,2) bracket; nothing fails.
    let out = run(&["reproduce", "--budget-nodes", "1", "--budget-secs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout(&out);
    assert!(table.contains("R_{5,2},incomplete,[11; ?]"), "table:\n{table}");
    assert!(!table.lines().any(|l| l.ends_with("false")), "no failed rows:\n{table}");
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["basis", "--n", "0", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tmpdir("config");
    let conf = dir.join("sosrank.conf");
    std::fs::write(&conf, "seed=23\nthreads=2\n").unwrap();
    let out = run(&[
        "--config",
        conf.to_str().unwrap(),
        "verify-lemmas",
        "--lemma",
        "macaulay",
        "--trials",
        "20",
        "--n-max",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}
