//! Frozen-output tests: the binary's reports are byte-compared against
//! checked-in golden files, so any drift in formatting, ordering, or
//! computed values fails loudly.

use std::path::PathBuf;
use std::process::{Command, Output};

use morley_cli::render::ReportDocument;

fn path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(path("tests/golden").join(name)).expect("golden file")
}

fn morley(fixture: &str, args: &[&str]) -> Output {
    let input = path("tests/fixtures").join(fixture);
    Command::new(env!("CARGO_BIN_EXE_morley"))
        .arg("--input")
        .arg(&input)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn check_reports_match_goldens() {
    for (fixture, golden_name, code) in [
        ("square_cube.txt", "square_cube_check.txt", 0),
        ("two_squares.txt", "two_squares_check.txt", 0),
        ("weighted_fp.txt", "weighted_fp_check.txt", 0),
        ("shared_factor.txt", "shared_factor_check.txt", 2),
    ] {
        let out = morley(fixture, &["check"]);
        assert_eq!(out.status.code(), Some(code), "{fixture}");
        assert_eq!(stdout(&out), golden(golden_name), "{fixture}");
    }
}

#[test]
fn form_commands_match_goldens() {
    for (fixture, cmd, golden_name) in [
        ("single_square.txt", "delta", "single_square_delta.txt"),
        ("square_cube.txt", "delta", "square_cube_delta.txt"),
        ("square_cube.txt", "lambda", "square_cube_lambda.txt"),
    ] {
        let out = morley(fixture, &[cmd]);
        assert_eq!(out.status.code(), Some(0), "{fixture} {cmd}");
        assert_eq!(stdout(&out), golden(golden_name), "{fixture} {cmd}");
    }
}

#[test]
fn json_report_matches_golden_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = morley(
        "square_cube.txt",
        &["check", "--json", json_path.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&json_path).unwrap();
    assert_eq!(written, golden("square_cube_check.json"));
    let doc: ReportDocument = serde_json::from_str(&written).expect("parses");
    assert_eq!(morley_cli::render::to_json(&doc), written, "round trip");
}

#[test]
fn output_is_deterministic() {
    let first = morley("weighted_fp.txt", &["check"]);
    let second = morley("weighted_fp.txt", &["check"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = morley("two_squares.txt", &["check", "--json", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn quiet_mode_prints_verdict_only() {
    let out = morley("square_cube.txt", &["--quiet", "check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "verdict: DUALITY VERIFIED\n");
}
