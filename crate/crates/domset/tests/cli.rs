//! End-to-end checks of the binary: exit codes, trace bytes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_domset"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("domset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_fixture(name: &str) -> PathBuf {
    let g = domset::named_fixture(name).unwrap();
    let path = tmp_dir().join(format!("{name}.graph"));
    std::fs::write(&path, g.to_text()).unwrap();
    path
}

#[test]
fn gen_infeasible_exits_2() {
    let out = run(&["gen", "--model", "regular", "--n", "5", "--d", "5", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infeasible"));
}

#[test]
fn gen_writes_parseable_regular_graph() {
    let dir = tmp_dir();
    let path = dir.join("r12.graph");
    let out = run(&[
        "gen", "--model", "regular", "--n", "12", "--d", "5", "--seed", "1", "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let g = domset::parse_graph(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(g.is_regular(5));
}

#[test]
fn solve_k55_trace_bytes() {
    let path = write_fixture("k55");
    let out = run(&["solve", "--scheme", "d5", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "\
{\"step\":1,\"rule\":\"W_HIGH\",\"A\":[0],\"f_before\":350,\"f_after\":245,\"s\":105,\"required\":105}
{\"step\":2,\"rule\":\"B_MID\",\"A\":[5],\"f_before\":245,\"f_after\":0,\"s\":245,\"required\":105}
{\"done\":true,\"D\":[0,5],\"bound\":3}
";
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}

#[test]
fn solve_is_byte_deterministic() {
    let dir = tmp_dir();
    let path = dir.join("mindeg.graph");
    let out = run(&[
        "gen", "--model", "mindeg", "--n", "40", "--d", "5", "--seed", "9", "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let a = run(&["solve", path.to_str().unwrap()]);
    let b = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve_trace_flag_duplicates_stdout() {
    let dir = tmp_dir();
    let graph_path = write_fixture("k6");
    let trace_path = dir.join("k6.trace");
    let out = run(&[
        "solve",
        "--trace",
        trace_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read(&trace_path).unwrap(),
        out.stdout,
        "trace file must hold the stdout bytes"
    );
}

#[test]
fn solve_rejects_sparse_graphs() {
    let dir = tmp_dir();
    let path = dir.join("p3.graph");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn initial_set_runs_the_extension_workflow() {
    let dir = tmp_dir();
    let graph_path = write_fixture("k55");
    let set_path = dir.join("seed.set");
    std::fs::write(&set_path, "0\n1\n").unwrap();
    let out = run(&[
        "solve",
        "--initial-set",
        set_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.ends_with("{\"done\":true,\"D\":[0,1,5],\"bound\":3}\n"));

    // a dependent pair is a usage error
    std::fs::write(&set_path, "0\n5\n").unwrap();
    let out = run(&[
        "solve",
        "--initial-set",
        set_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // a maximal side of the bipartition is a corollary violation: exit 1
    std::fs::write(&set_path, "0\n1\n2\n3\n4\n").unwrap();
    let out = run(&[
        "solve",
        "--initial-set",
        set_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corollary violation"));
}

#[test]
fn oracle_reports_gamma_and_witness() {
    let path = write_fixture("k55");
    let out = run(&["oracle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("gamma 2\n"));

    let out = run(&["oracle", "--node-limit", "1", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inconclusive"));
}

#[test]
fn check_prints_bound_table() {
    let path = write_fixture("k6");
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("harmonic bound"));
    assert!(stdout.contains("49/20"));
    assert!(stdout.contains("2.450000"));
    assert!(stdout.contains("guaranteed bound"));
    assert!(stdout.contains("gamma"));
    let gamma_line = stdout.lines().find(|l| l.starts_with("gamma")).unwrap();
    assert!(gamma_line.contains('1'));
}

#[test]
fn verify_claims_reports() {
    let dir = tmp_dir();
    let graph_path = write_fixture("pendant_k6");
    let set_path = dir.join("x.set");
    std::fs::write(&set_path, "0\n").unwrap();
    let out = run(&[
        "verify-claims",
        "--scheme",
        "d5",
        "--set",
        set_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], serde_json::json!(true));
    assert_eq!(report["potential"], serde_json::json!(105));
    assert_eq!(report["components"][0]["charge_total"], serde_json::json!(630));

    // two picks on k55 leave three-white blues next to isolated whites
    let graph_path = write_fixture("k55");
    std::fs::write(&set_path, "0\n1\n").unwrap();
    let out = run(&[
        "verify-claims",
        "--scheme",
        "d5",
        "--set",
        set_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], serde_json::json!(false));
}

#[test]
fn fuzz_passes_and_is_deterministic() {
    let args = [
        "fuzz", "--scheme", "d5", "--count", "40", "--n-range", "10:40", "--seed", "7",
    ];
    let a = run(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&a.stderr)
    );
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("fuzz pass: 40 instances"));
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);

    let out = run(&["fuzz", "--scheme", "d4", "--count", "25", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn log_env_goes_to_stderr_only() {
    let path = write_fixture("k55");
    let quiet = run(&["solve", path.to_str().unwrap()]);
    let chatty = bin()
        .args(["solve", path.to_str().unwrap()])
        .env("DOMSET_LOG", "info")
        .output()
        .unwrap();
    assert_eq!(quiet.stdout, chatty.stdout);
    assert!(quiet.stderr.is_empty());
    assert!(String::from_utf8_lossy(&chatty.stderr).contains("solved"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--scheme", "d7", "/dev/null"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--model", "named", "--name", "nope"]).status.code(), Some(2));
}
