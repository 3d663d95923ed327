//! End-to-end tests of the `skewlin` binary: exit codes, output shapes,
//! determinism and the error paths.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewlin"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("piped stdin")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

const WITNESS: &str = r#"{"ring":"quaternion","rows":2,"cols":2,"entries":[[["1","0","0","0"],["1","0","0","1"]],[["0","0","1","0"],["0","1","1","0"]]]}"#;

fn witness_system(side: &str) -> String {
    format!(
        r#"{{"A":{WITNESS},"b":{{"ring":"quaternion","rows":2,"cols":1,"entries":[[["1","0","0","0"]],[["1","0","0","0"]]]}},"side":"{side}"}}"#
    )
}

#[test]
fn demo_walks_through_the_witness() {
    let output = bin().arg("demo").output().expect("runs");
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("RC rank: 1"));
    assert!(text.contains("CR rank: 2"));
    assert!(text.contains("RC quasideterminant at (1,1): 0"));
    assert!(text.contains("CR quasideterminant at (1,1): 2i"));
    assert!(text.contains("row 1 = (j) * row 0"));
    assert!(text.contains("all claims verified exactly."));
}

#[test]
fn demo_output_is_byte_identical_across_runs() {
    let first = bin().arg("demo").output().expect("runs");
    let second = bin().arg("demo").output().expect("runs");
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn solve_rc_system_with_witness_is_inconsistent() {
    let output = run_with_stdin(&["solve", "--product", "rc", "-"], &witness_system("right"));
    assert_eq!(output.status.code(), Some(1), "inconsistent = exit 1");
    assert!(stdout(&output).contains("inconsistent"));
}

#[test]
fn solve_cr_system_with_witness_is_unique() {
    let output = run_with_stdin(&["solve", "--product", "cr", "-"], &witness_system("right"));
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("unique solution"));
}

#[test]
fn solve_json_output_round_trips() {
    let output = run_with_stdin(
        &["solve", "--product", "cr", "--format", "json", "-"],
        &witness_system("right"),
    );
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    assert_eq!(value["outcome"], "unique");
    assert_eq!(value["solution"]["ring"], "quaternion");
}

#[test]
fn rank_reports_certificates() {
    let output = run_with_stdin(&["rank", "-"], WITNESS);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("RC rank: 1"));
    assert!(text.contains("left coefficients [(j)]"));
}

#[test]
fn inverse_exit_codes_track_singularity() {
    let rc = run_with_stdin(&["inverse", "--product", "rc", "-"], WITNESS);
    assert_eq!(rc.status.code(), Some(1));
    assert!(stdout(&rc).contains("RC-singular"));
    let cr = run_with_stdin(&["inverse", "--product", "cr", "-"], WITNESS);
    assert_eq!(cr.status.code(), Some(0));
}

#[test]
fn singular_check_prints_both_flags() {
    let output = run_with_stdin(&["singular-check", "--format", "json", "-"], WITNESS);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    assert_eq!(value["rc_singular"], true);
    assert_eq!(value["cr_singular"], false);
}

#[test]
fn quasidet_single_position_and_table() {
    let single = run_with_stdin(
        &["quasidet", "--row", "1", "--col", "1", "-"],
        WITNESS,
    );
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(stdout(&single).trim(), "0");
    let table = run_with_stdin(&["quasidet", "--product", "cr", "-"], WITNESS);
    assert!(stdout(&table).contains("(1,1): 2i"));
    let half = run_with_stdin(&["quasidet", "--row", "1", "-"], WITNESS);
    assert_eq!(half.status.code(), Some(2), "row without col is a usage error");
}

#[test]
fn span_and_independent_and_coords() {
    let family = format!(
        r#"{{"family":{WITNESS},"vector":{{"ring":"quaternion","rows":1,"cols":2,"entries":[[["0","0","1","0"],["0","1","1","0"]]]}}}}"#
    );
    // Row 1 of the witness is inside the span of its rows.
    let span = run_with_stdin(&["span", "-"], &family);
    assert_eq!(span.status.code(), Some(0));

    let indep = run_with_stdin(&["independent", "-"], &family);
    assert_eq!(indep.status.code(), Some(1), "rcd-dependent rows = exit 1");
    assert!(stdout(&indep).contains("independent: false"));
    let indep_cr = run_with_stdin(&["independent", "--space", "crd", "-"], &family);
    assert_eq!(indep_cr.status.code(), Some(0));
    assert!(stdout(&indep_cr).contains("independent: true"));

    let coords = format!(
        r#"{{"basis":{WITNESS},"vector":{{"ring":"quaternion","rows":1,"cols":2,"entries":[[["1","0","0","0"],["0","0","0","0"]]]}}}}"#
    );
    let under_rcd = run_with_stdin(&["coords", "-"], &coords);
    assert_eq!(under_rcd.status.code(), Some(1), "witness is not an rcd basis");
    let under_crd = run_with_stdin(&["coords", "--space", "crd", "-"], &coords);
    assert_eq!(under_crd.status.code(), Some(0));
    assert!(stdout(&under_crd).starts_with("coefficients:"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let garbage = run_with_stdin(&["rank", "-"], "not json");
    assert_eq!(garbage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&garbage.stderr).contains("invalid JSON"));

    let missing = bin().args(["rank", "/nonexistent/file.json"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));

    // Structurally valid JSON with a bad scalar still carries a position.
    let bad_scalar =
        r#"{"ring":"rational","rows":1,"cols":1,"entries":[["1/x"]]}"#;
    let output = run_with_stdin(&["rank", "-"], bad_scalar);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("position"));
}

#[test]
fn rational_ring_inputs_work() {
    let matrix = r#"{"ring":"rational","rows":2,"cols":2,"entries":[["1","2"],["3","4"]]}"#;
    let output = run_with_stdin(&["inverse", "-"], matrix);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("-2"));
    assert!(text.contains("3/2"));
    let rank = run_with_stdin(&["rank", "--product", "cr", "-"], matrix);
    assert!(stdout(&rank).contains("CR rank: 2"));
}

#[test]
fn self_test_runs_with_fixed_seed() {
    let output = bin()
        .arg("self-test")
        .env("SKEWLIN_SEED", "7")
        .output()
        .expect("runs");
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("self-test with seed 7"));
    assert!(text.contains("self-test passed"));
    assert!(!text.contains("FAIL"));
    let bad_seed = bin()
        .arg("self-test")
        .env("SKEWLIN_SEED", "not-a-number")
        .output()
        .expect("runs");
    assert_eq!(bad_seed.status.code(), Some(2));
}
