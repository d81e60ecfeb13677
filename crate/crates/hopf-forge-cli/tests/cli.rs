//! End-to-end tests of the binary: argument surface, exit codes, catalog
//! resolution (including the environment override), JSON output, and
//! derived-file emission.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopf-forge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_all_passes_and_exits_zero() {
    let out = run(&["verify", "--in", "c2_f2", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("classification: hopf-monad"), "{text}");
    assert!(text.contains("ok   [    D.1.18] bimonad.mul.comul"), "{text}");
}

#[test]
fn verify_without_antipode_still_exits_zero() {
    let out = run(&["verify", "--in", "monoid_1z_f2", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("classification: bimonad-no-antipode"));
}

#[test]
fn json_reports_are_machine_readable() {
    let out = run(&["verify", "--in", "z4_set", "--suite", "all", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["instance"], "z4_set");
    assert_eq!(v["classification"], "hopf-monad");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn antipode_failure_exits_one_with_certificate() {
    let out = run(&["antipode", "--in", "monoid_1z_f2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("rank 3 of 4"), "{text}");
}

#[test]
fn antipode_writes_derived_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2_with_s.json");
    let out = run(&["antipode", "--in", "c2_f2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"antipode\""));
    // The emitted file verifies clean.
    let out = run(&["verify", "--in", path.to_str().unwrap(), "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("antipode.matches.declared"));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"backend\": \"vect\",").unwrap();
    let out = run(&["verify", "--in", path.to_str().unwrap(), "--suite", "all"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));

    let out = run(&["verify", "--in", "not_a_catalog_name", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a catalog entry"));
}

#[test]
fn catalog_dir_env_overrides_builtins() {
    let dir = tempfile::tempdir().unwrap();
    // A two-element set instance under a name that is NOT built in.
    std::fs::write(
        dir.path().join("tiny.json"),
        "{\n  \"backend\": \"set\",\n  \"size\": 2,\n  \"table\": [\n    [0, 1],\n    [1, 0]\n  ],\n  \"unit\": 0\n}\n",
    )
    .unwrap();
    let out = bin()
        .args(["group", "--in", "tiny"])
        .env("HOPF_FORGE_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("group: true"));
    // Without the override the name does not resolve.
    let out = run(&["group", "--in", "tiny"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_verdicts() {
    let out = run(&["group", "--in", "z4_set"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("group: true"));

    let out = run(&["group", "--in", "monoid_1z_set"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("group: false") && text.contains("collision"), "{text}");

    let out = run(&["group", "--in", "c2_f2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fundamental_respects_max_dim() {
    let out = run(&["fundamental", "--in", "c2_f2", "--max-dim", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("free2.fund.size") && !text.contains("free3."), "{text}");

    let out = run(&["fundamental", "--in", "monoid_1z_f2", "--max-dim", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no antipode"));
}

#[test]
fn derived_commands_emit_and_reverify() {
    let dir = tempfile::tempdir().unwrap();
    for (cmd, name) in [("double", "c2_f2"), ("opposite", "sweedler_f5"), ("dualize", "c3_f3")] {
        let path = dir.path().join(format!("{cmd}.json"));
        let out = run(&[cmd, "--in", name, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", stderr(&out));
        assert!(Path::new(&path).is_file());
        let out = run(&["verify", "--in", path.to_str().unwrap(), "--suite", "all"]);
        assert_eq!(out.status.code(), Some(0), "{cmd} re-verify: {}", stderr(&out));
        assert!(stdout(&out).contains("classification: hopf-monad"));
    }
}

#[test]
fn mate_on_set_instance_has_no_out_file() {
    let out = run(&["mate", "--in", "z4_set"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mate.json");
    let out = run(&["mate", "--in", "z4_set", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no derived file"));
}

#[test]
fn caps_flags_reach_the_engine() {
    let out = run(&["verify", "--in", "c2_f2", "--suite", "all", "--arity-cap", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("arity"), "{}", stderr(&out));
}

#[test]
fn dualize_rejects_set_backend() {
    let out = run(&["dualize", "--in", "z4_set"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("vector backend"));
}
