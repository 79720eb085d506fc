//! End-to-end checks of the `bhole` binary: output contracts and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_bhole");

// graph6 strings used throughout: C5, K5, K4, Petersen, K1
const C5: &str = "Dhc";
const K5: &str = "D~{";
const K4: &str = "C~";
const PETERSEN: &str = "IheA@GUAo";
const K1: &str = "@";

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).unwrap()
}

#[test]
fn invariants_cycle5() {
    let out = run(&["invariants", C5]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["n"], 5);
    assert_eq!(v["e"], 5);
    assert_eq!(v["delta"], 2);
    assert_eq!(v["sigma2"], 4);
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["alpha_tilde"], 3);
    assert_eq!(v["blocking_pair"], serde_json::json!([2, 2]));
}

#[test]
fn invariants_complete_graph_renders_infinity() {
    let v = json_of(&run(&["invariants", K5]));
    assert_eq!(v["sigma2"], "infinity");
    assert_eq!(v["alpha_tilde"], 1);
    assert_eq!(v["kappa"], 4);
}

#[test]
fn invariants_petersen() {
    let v = json_of(&run(&["invariants", PETERSEN]));
    assert_eq!(v["delta"], 3);
    assert_eq!(v["alpha_tilde"], 5);
    assert_eq!(v["kappa"], 3);
}

#[test]
fn invariants_single_vertex_reports_reason() {
    let v = json_of(&run(&["invariants", K1]));
    assert!(v["alpha_tilde"].is_null());
    assert!(v["reason"].as_str().unwrap().contains("at least 2"));
}

#[test]
fn invariants_bad_graph6_exits_2() {
    let out = run(&["invariants", "not graph6!"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte"), "error should carry a byte offset: {err}");
}

#[test]
fn hamilton_cycle_witness_and_refusal() {
    let out = run(&["hamilton", C5, "cycle", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "0 1 2 3 4");

    let out = run(&["hamilton", PETERSEN, "cycle", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "none");
    let v = json_of(&run(&["hamilton", PETERSEN, "cycle"]));
    assert_eq!(v["refusal"], "no such cycle");
}

#[test]
fn hamilton_connected_and_path() {
    let out = run(&["hamilton", K4, "connected", "--format", "text"]);
    assert_eq!(stdout_of(&out).trim(), "hamiltonian-connected: true");

    // in a cycle, a spanning path exists exactly between adjacent endpoints
    let v = json_of(&run(&["hamilton", C5, "path", "0", "1"]));
    let witness = v["witness"].as_str().unwrap();
    assert!(witness.starts_with('0') && witness.ends_with('1'));
    let v = json_of(&run(&["hamilton", C5, "path", "0", "2"]));
    assert_eq!(v["refusal"], "no such path");

    let out = run(&["hamilton", C5, "path", "0", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn holes_witness_and_profile() {
    let v = json_of(&run(&["holes", C5, "--s", "2", "--t", "2"]));
    assert_eq!(v["exists"], false);
    let v = json_of(&run(&["holes", C5, "--s", "1", "--t", "2"]));
    assert_eq!(v["exists"], true);
    assert!(v["witness"].is_object());

    let v = json_of(&run(&["holes", C5]));
    assert_eq!(v["profile"], serde_json::json!([5, 2, 1, 0, 0, 0]));
    assert_eq!(v["alpha_tilde"], 3);
}

#[test]
fn generate_families() {
    let out = run(&["generate", "cycle", "--n", "5"]);
    assert_eq!(stdout_of(&out).trim(), C5);

    let out = run(&["generate", "sharpness1", "--a", "1", "--b", "7"]);
    assert!(out.status.success());
    let line = stdout_of(&out);
    let g = bhole::graph6::from_graph6(line.trim()).unwrap();
    assert_eq!(g.order(), 8);

    let out = run(&["generate", "sharpness1", "--a", "1", "--b", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("requires b ≥ 3a+4"));
}

#[test]
fn gnp_needs_seed_and_is_deterministic() {
    let out = run(&["generate", "gnp", "--n", "8", "--p", "0.5"]);
    assert_eq!(out.status.code(), Some(2));

    let a = run(&["generate", "gnp", "--n", "8", "--p", "0.5", "--seed", "7"]);
    let b = run(&["generate", "gnp", "--n", "8", "--p", "0.5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_enumerate_clean_sweep() {
    let out = run(&["verify", "--enumerate", "3..5", "--theorem", "ore-hole"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["graphs_scanned"], 1096);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert!(v["theorems"]["ore-hole"]["hypothesis_true"].as_u64().unwrap() > 0);
}

#[test]
fn verify_output_independent_of_worker_count() {
    let one = run(&["verify", "--enumerate", "3..6", "--workers", "1"]);
    let four = run(&["verify", "--enumerate", "3..6", "--workers", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_corpus_from_stdin() {
    let mut child = Command::new(BIN)
        .args(["verify", "--corpus", "-", "--theorem", "dirac"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(format!("{C5}\n{K5}\n{PETERSEN}\n").as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["graphs_scanned"], 3);
}

#[test]
fn verify_malformed_corpus_exits_2() {
    let dir = std::env::temp_dir().join("bhole-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.g6");
    std::fs::write(&path, "this is not graph6\n").unwrap();
    let out = run(&["verify", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_rejects_bad_range_and_usage() {
    for args in [
        &["verify", "--enumerate", "0..5"][..],
        &["verify", "--enumerate", "3..99"],
        &["verify", "--enumerate", "abc"],
        &["verify"],
        &["verify", "--enumerate", "3..4", "--theorem", "nope"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("bhole-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "invariants",
        C5,
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["alpha_tilde"], 3);
}
