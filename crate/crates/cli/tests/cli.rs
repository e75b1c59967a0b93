//! Black-box tests of the binary: documented examples, exit codes, and
//! byte-stable JSON.

use std::process::{Command, Output};

fn matchwise(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchwise"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = matchwise(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn solve_star_example() {
    let text = stdout(&["solve", "--t", "2", "--target", "S3"]);
    assert!(text.contains("value: 6"), "{text}");
    assert!(text.contains("witness:"), "{text}");
}

#[test]
fn bounds_bundle_example() {
    let text = stdout(&["bounds", "--target", "B[1,1]", "--t-max", "2"]);
    assert!(text.contains("  2      9     12"), "{text}");
}

#[test]
fn family_example() {
    let text = stdout(&["family", "--alpha", "1", "--n", "10"]);
    assert!(text.contains("k = 2"), "{text}");
    assert!(text.contains("ell: [6, 0]"), "{text}");
    assert!(text.contains("max degree = 8"), "{text}");
}

#[test]
fn construct_serializes_padded_edge() {
    let text = stdout(&["construct", "--expr", "pad(K2,3)"]);
    assert_eq!(text.trim(), "D_?");
    let dot = stdout(&["construct", "--expr", "P3", "--out", "dot"]);
    assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"), "{dot}");
}

#[test]
fn arrows_reports_certificates() {
    let text = stdout(&["arrows", "--host", "U[2;1,1]", "--t", "2", "--target", "B[1,1]"]);
    assert!(text.contains("verdict: arrows"), "{text}");
    assert!(text.contains("method:  bipartite-cover"), "{text}");

    // a failing instance carries the bad coloring
    let text = stdout(&["arrows", "--host", "M2", "--t", "2", "--target", "P3"]);
    assert!(text.contains("verdict: fails"), "{text}");
    assert!(text.contains("red edges:"), "{text}");
}

#[test]
fn methods_can_be_forced() {
    for method in ["auto", "generic", "cover"] {
        let text = stdout(&["arrows", "--host", "C6", "--t", "2", "--target", "P3", "--method", method]);
        let verdict = text.lines().next().unwrap().to_string();
        assert!(verdict.starts_with("verdict:"), "{text}");
        // all three agree on this instance
        assert!(verdict.contains("arrows"), "method {method}: {text}");
    }
}

#[test]
fn json_is_byte_stable() {
    let a = stdout(&["solve", "--t", "2", "--target", "S3", "--format", "json"]);
    let b = stdout(&["solve", "--t", "2", "--target", "S3", "--format", "json"]);
    assert_eq!(a, b);
    assert!(a.contains("\"schema\": \"matchwise/1\""), "{a}");
    assert!(a.contains("\"exact\": 6"), "{a}");

    let a = stdout(&["verify", "--instances", "6", "--seed", "7", "--format", "json"]);
    let b = stdout(&["verify", "--instances", "6", "--seed", "7", "--format", "json"]);
    assert_eq!(a, b);
    assert!(a.contains("\"passed\": true"), "{a}");
}

#[test]
fn parse_errors_exit_2() {
    let out = matchwise(&["bounds", "--target", "Q9"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("parse error at byte 0"), "{msg}");
}

#[test]
fn cap_violations_exit_3() {
    let out = matchwise(&["construct", "--expr", "K99"]);
    assert_eq!(out.status.code(), Some(3));
    let out = matchwise(&["family", "--alpha", "1/2", "--n", "11"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn capped_solves_exit_4() {
    let out = matchwise(&["solve", "--t", "3", "--target", "S3", "--max-edges", "5"]);
    assert_eq!(out.status.code(), Some(4));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("caps hit"), "{text}");
}

#[test]
fn envelope_emits_csv() {
    let text = stdout(&["envelope", "--c", "3", "--m-max", "8", "--kc", "1.0"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,core_growth"));
    assert_eq!(text.lines().count(), 4); // header + m = 2, 4, 8
    let with_curve = stdout(&["envelope", "--c", "3", "--m-max", "8", "--kc", "1.0", "--cdelta", "2.0"]);
    assert!(with_curve.starts_with("m,core_growth,bounded_degree"), "{with_curve}");
}

#[test]
fn graph6_expressions_round_trip_through_construct() {
    let g6 = stdout(&["construct", "--expr", "C5"]);
    let expr = format!("g6:{}", g6.trim());
    let back = stdout(&["construct", "--expr", &expr]);
    assert_eq!(g6, back);
}

#[cfg(unix)]
#[test]
fn closed_pipe_does_not_panic() {
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_matchwise"))
        .args(["bounds", "--target", "B[2,1]", "--t-max", "6"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take()); // reader goes away before the table is written
    let out = child.wait_with_output().unwrap();
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(!err.contains("panicked"), "{err}");
}
