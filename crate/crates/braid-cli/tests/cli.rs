//! Integration tests for CLI behaviors beyond the golden contract: batch
//! input, tracing, inversion, the report commands and the bench smoke test.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn braid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid"))
        .args(args)
        .env_remove("BRAID_STEP_GUARD")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn normalize_batch_preserves_input_order() {
    let dir = env!("CARGO_TARGET_TMPDIR");
    let path = format!("{dir}/normalize_batch.txt");
    std::fs::write(&path, "a2 a1 a2\na1^-1\n\nD D^-1\n").unwrap();
    let out = braid(&["normalize", "-n", "2", "--file", &path]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "D^1 | \nD^-1 | a1 a2\nD^0 | \nD^0 | \n");
}

#[test]
fn normalize_reads_stdin_dash() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braid"))
        .args(["normalize", "-n", "2", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"a1 a2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "D^0 | a1 a2\n");
}

#[test]
fn equal_batch_pairs_and_exit_code() {
    let dir = env!("CARGO_TARGET_TMPDIR");
    let path = format!("{dir}/equal_batch.txt");
    std::fs::write(&path, "a1 a2 a1 | a2 a1 a2\na1 | a2\n").unwrap();
    let out = braid(&["equal", "-n", "2", "--file", &path]);
    assert_eq!(stdout(&out), "true\nfalse\n");
    assert_eq!(code(&out), 1, "any false makes the batch exit 1");

    let out = braid(&["equal", "-n", "2", "--file", &path, "--json"]);
    assert_eq!(stdout(&out).trim(), "[true,false]");
}

#[test]
fn equal_requires_exactly_two_words() {
    let out = braid(&["equal", "-n", "2", "a1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn trace_lists_rewrite_steps_before_the_result() {
    let out = braid(&["normalize", "-n", "2", "--trace", "a2 a1 a2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "a2 a1 a2 | R1(i=1, j=2, V=\"\", W=\"\")@[0, 3) | a1 a2 a1");
    assert_eq!(lines[1], "a1 a2 a1 | R3(V1=\"\")@[0, 3) | D");
    assert_eq!(lines[2], "D^1 | ");
}

#[test]
fn invert_golden() {
    let out = braid(&["invert", "-n", "2", "a1"]);
    assert_eq!(stdout(&out), "D^-1 | a1 a2\n");
    let out = braid(&["invert", "-n", "2", "D"]);
    assert_eq!(stdout(&out), "D^-1 | \n");
    let out = braid(&["invert", "-n", "2", ""]);
    assert_eq!(stdout(&out), "D^0 | \n");
}

#[test]
fn invert_is_inverse_under_equal() {
    let word = "a1 a2^-1 D a1";
    let out = braid(&["invert", "-n", "2", word]);
    let nf_line = stdout(&out);
    let inverse = nf_line.trim().replace(" | ", " ");
    let check = braid(&["equal", "-n", "2", &format!("{word} {inverse}"), ""]);
    assert_eq!(stdout(&check), "true\n", "u * u^-1 should be the identity");
}

#[test]
fn lemmas_clean_run_and_json() {
    let out = braid(&["lemmas", "-n", "3", "--trials", "25", "--seed", "9"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ladder_absorb: 25 trials, 0 counterexamples"));

    let out = braid(&["lemmas", "-n", "3", "--trials", "5", "--seed", "9", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["counterexamples"], 0);
    assert_eq!(v["entries"].as_array().unwrap().len(), 12);
}

#[test]
fn oracle_check_exhaustive_and_sampled() {
    let out = braid(&["oracle-check", "-n", "2", "--exhaustive", "--max-len", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 disagreements"));

    let out = braid(&[
        "oracle-check",
        "-n",
        "3",
        "--trials",
        "50",
        "--max-len",
        "6",
        "--seed",
        "3",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["words"], 50);
}

#[test]
fn bench_smoke() {
    let out = braid(&["bench", "-n", "3", "--count", "5", "--len", "10", "--seed", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("normalized 5 words"));
}

#[test]
fn step_guard_env_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_braid"))
        .args(["normalize", "-n", "2", "a2 a1 a2"])
        .env("BRAID_STEP_GUARD", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn rank_is_never_inferred() {
    // a3 is fine at rank 3 and a parse error at rank 2.
    assert_eq!(code(&braid(&["normalize", "-n", "3", "a3"])), 0);
    assert_eq!(code(&braid(&["normalize", "-n", "2", "a3"])), 2);
}

#[test]
fn missing_rank_is_a_usage_error() {
    let out = braid(&["normalize", "a1"]);
    assert_eq!(code(&out), 2);
}
