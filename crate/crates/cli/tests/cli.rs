//! End-to-end tests of the `recovery` binary on the shipped instance
//! files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_recovery"))
}

fn instance(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name);
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn solve_first_example_nonjumping() {
    let out = json_of(&run(&[
        "solve",
        "--instance",
        &instance("ex1.json"),
        "--method",
        "nonjumping",
    ]));
    assert_eq!(out["reward"], 2);
    assert_eq!(out["repaired"], serde_json::json!([2, 3]));
}

#[test]
fn solve_first_example_exhaustive() {
    let out = json_of(&run(&[
        "solve",
        "--instance",
        &instance("ex1.json"),
        "--method",
        "exhaustive",
    ]));
    assert_eq!(out["reward"], 2);
}

#[test]
fn healthiest_policy_on_first_example() {
    let out = json_of(&run(&[
        "policy",
        "--instance",
        &instance("ex1.json"),
        "--name",
        "healthiest",
    ]));
    assert_eq!(out["reward"], 1);
    assert_eq!(out["repaired"], serde_json::json!([1]));
}

#[test]
fn least_modified_policy_on_second_example() {
    let out = json_of(&run(&[
        "policy",
        "--instance",
        &instance("ex2.json"),
        "--name",
        "least-modified",
    ]));
    assert_eq!(out["reward"], 1);
}

#[test]
fn least_modified_policy_oscillates_on_third_example() {
    let out = json_of(&run(&[
        "policy",
        "--instance",
        &instance("ex3.json"),
        "--name",
        "least-modified",
    ]));
    assert_eq!(out["reward"], 0);
    assert!(!out["jumps"].as_array().unwrap().is_empty());
}

#[test]
fn fixed_order_on_third_example() {
    let out = json_of(&run(&[
        "simulate",
        "--instance",
        &instance("ex3.json"),
        "--actions",
        "order:2,1",
    ]));
    assert_eq!(out["reward"], 1);
    assert_eq!(out["repaired"], serde_json::json!([2]));
}

#[test]
fn explicit_step_list_on_first_example() {
    let out = json_of(&run(&[
        "simulate",
        "--instance",
        &instance("ex1.json"),
        "--actions",
        "2,2,2,2,2,2,2,3,3,3,3,3,3,3,3,3",
    ]));
    assert_eq!(out["reward"], 2);
    assert_eq!(out["jumps"], serde_json::json!([]));
}

#[test]
fn reduce_triangle_decides_yes() {
    let dir = std::env::temp_dir().join("recovery-cli-test-reduce");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k3.json");
    std::fs::write(&path, r#"{"s":3,"edges":[[1,2],[2,3],[1,3]]}"#).unwrap();
    let out = json_of(&run(&[
        "reduce",
        "--graph",
        path.to_str().unwrap(),
        "--p",
        "3",
        "--decide",
    ]));
    assert_eq!(out["n"], 7);
    assert_eq!(out["clique"], true);
    assert_eq!(out["oracle"], true);
}

#[test]
fn classify_reports_regimes() {
    let out = json_of(&run(&["classify", "--instance", &instance("ex1.json")]));
    assert_eq!(out["dominant_decay"], true);
    assert!(!out["assumption1"].is_null());
    let out = json_of(&run(&["classify", "--instance", &instance("ex2.json")]));
    assert_eq!(out["dominant_repair"], true);
}

#[test]
fn gen_output_roundtrips_bit_identically() {
    let args = [
        "gen",
        "--n",
        "4",
        "--class",
        "general-dag",
        "--regime",
        "dominant-decay",
        "--denominator",
        "6",
        "--horizon",
        "12",
        "--seed",
        "42",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "same seed, same bytes");

    let inst: recovery_core::Instance = serde_json::from_slice(&first.stdout).unwrap();
    let rewritten = serde_json::to_string(&inst).unwrap();
    let back: recovery_core::Instance = serde_json::from_str(&rewritten).unwrap();
    assert_eq!(back, inst);

    // the generated file is consumable by the other subcommands
    let dir = std::env::temp_dir().join("recovery-cli-test-gen");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gen.json");
    std::fs::write(&path, &first.stdout).unwrap();
    let out = run(&["solve", "--instance", path.to_str().unwrap(), "--method", "nonjumping"]);
    assert!(out.status.success());
}

#[test]
fn verify_suite_passes_and_exits_zero() {
    let out = run(&["verify", "--suite", "theorem1", "--seeds", "10"]);
    let report = json_of(&out);
    assert_eq!(report["violations"], serde_json::json!([]));
    assert_eq!(report["instances_run"], 10);
}

#[test]
fn usage_error_exits_64() {
    let out = run(&["solve", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn domain_errors_exit_one() {
    let out = run(&[
        "solve",
        "--instance",
        "/nonexistent/nowhere.json",
        "--method",
        "nonjumping",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let dir = std::env::temp_dir().join("recovery-cli-test-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cycle.json");
    std::fs::write(
        &path,
        r#"{"nodes":[
            {"id":1,"v0":"1/2","inc":"1/10","dec":"1/10"},
            {"id":2,"v0":"1/2","inc":"1/10","dec":"1/10"}],
            "edges":[[1,2],[2,1]],"T":"inf"}"#,
    )
    .unwrap();
    let out = run(&["classify", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cycle"));

    // infeasible fixed order is a domain error, not a crash
    let out = run(&[
        "simulate",
        "--instance",
        &instance("ex1.json"),
        "--actions",
        "order:3,2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
