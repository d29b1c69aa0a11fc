//! Pinned behavior of the `gtrig` binary: output strings, exit codes, and
//! the CSV contract.  Values printed by `pi` and `eval` are trimmed to 15
//! significant digits, so these strings are stable across platforms as long
//! as the underlying f64s are — which is the point of pinning them.

use std::process::{Command, Output};

use gtrig::{parse_csv, render_csv, CSV_HEADER};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtrig")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn pi_prints_fifteen_significant_digits() {
    let out = run(&["pi", "--p", "2", "--q", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3.14159265358979\n");

    let out = run(&["pi", "--p", "3", "--q", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2.41839915231229\n");
}

#[test]
fn pi_rejects_exponents_at_or_below_one() {
    let out = run(&["pi", "--p", "1", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("domain error"), "stderr: {}", stderr(&out));
}

#[test]
fn eval_pinned_values() {
    let out = run(&["eval", "--fn", "sin", "--p", "2", "--q", "2", "--x", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0.841470984807897\n");

    let out = run(&["eval", "--fn", "cos", "--p", "2", "--q", "2", "--x", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["eval", "--fn", "sin", "--p", "3", "--q", "3", "--x", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0.911392333229085\n");
}

#[test]
fn eval_second_derivative_at_singular_point_exits_3() {
    // pi_{3,3}/2 = 1.2091995761561452...; S'' blows up there for p > 2.
    let out = run(&["eval", "--fn", "sin-dd", "--p", "3", "--q", "3", "--x", "1.2091995761561452"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("singular"), "stderr: {}", stderr(&out));

    // Away from the excluded point it evaluates fine.
    let out = run(&["eval", "--fn", "sin-dd", "--p", "3", "--q", "3", "--x", "0.7"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!(v < 0.0, "S'' should be negative on (0, pi_pq), got {v}");
}

#[test]
fn eval_series3_matches_library_value() {
    let out = run(&["eval", "--fn", "series3", "--p", "2", "--q", "2", "--x", "0.3"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 0.29552025).abs() < 1e-9, "series3(0.3) printed as {v}");
}

#[test]
fn counterexample_found_for_3_3_and_absent_for_2_2() {
    let out = run(&["counterexample", "--p", "3", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("margin = -"), "stdout: {text}");
    assert!(text.contains("first margin crossing near x = 1.351602564"), "stdout: {text}");

    let out = run(&["counterexample", "--p", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("no counterexample found"));
}

#[test]
fn verify_suites_pass_on_reference_parameters() {
    let cases: [&[&str]; 7] = [
        &["verify", "--suite", "redheffer", "--p", "2", "--q", "2", "--n", "400"],
        &["verify", "--suite", "upper", "--p", "3", "--n", "400"],
        &["verify", "--suite", "cos", "--q", "3", "--n", "400"],
        &["verify", "--suite", "conditions", "--p", "2", "--q", "2", "--n", "200"],
        &["verify", "--suite", "multiple-angle", "--q", "3", "--n", "300"],
        &["verify", "--suite", "ode", "--p", "2", "--q", "2"],
        &["verify", "--suite", "series", "--p", "3", "--q", "3"],
    ];
    for args in cases {
        let out = run(args);
        let text = stdout(&out);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {text}{}", stderr(&out));
        assert!(text.trim_end().ends_with("PASS"), "{args:?}: {text}");
    }
}

#[test]
fn verify_cos_suite_ignores_p() {
    let with_p = run(&["verify", "--suite", "cos", "--p", "2", "--q", "2", "--n", "500"]);
    let without = run(&["verify", "--suite", "cos", "--q", "2", "--n", "500"]);
    assert_eq!(with_p.status.code(), Some(0));
    assert_eq!(with_p.stdout, without.stdout);
}

#[test]
fn verify_rejects_out_of_regime_and_bad_usage() {
    let out = run(&["verify", "--suite", "redheffer", "--p", "1.5", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("regime"), "stderr: {}", stderr(&out));

    // upper is a q = 2 family; an explicit contradictory q is refused.
    let out = run(&["verify", "--suite", "upper", "--p", "3", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // Missing required parameter for the suite.
    let out = run(&["verify", "--suite", "redheffer", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown subcommands and flags are usage errors too (clap's own path).
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["pi", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn scan_csv_contract() {
    let args = ["scan", "--p", "2", "--q", "2", "--from", "0.1", "--to", "3.0", "--n", "60"];
    let text = stdout(&run(&args));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(text.lines().count(), 61, "header plus one line per point");

    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 60);
    assert_eq!(rows[0].x, 0.1, "inclusive left endpoint");
    assert_eq!(rows[59].x, 3.0, "inclusive right endpoint");
    for r in &rows {
        // 17 significant digits must reproduce every f64 exactly, and at
        // q = 2 the q-power variant is the proven bound itself.
        assert_eq!(r.lower.to_bits(), r.qpower.to_bits(), "q=2 coincidence at x={}", r.x);
        assert_eq!(r.margin.to_bits(), (r.sin_ratio - r.lower).to_bits());
        assert!(r.upper.is_some(), "q = 2 has an upper bound column");
    }
    // Round trip: rendering the parsed rows reproduces the bytes.
    assert_eq!(render_csv(&rows), text);

    // A q != 2 scan leaves the upper field empty.
    let text = stdout(&run(&["scan", "--p", "3", "--q", "3", "--from", "0.5", "--to", "2.0", "--n", "4"]));
    assert!(text.lines().nth(1).unwrap().ends_with(",,") || {
        let fields: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        fields[4].is_empty()
    });
    let rows = parse_csv(&text).unwrap();
    assert!(rows.iter().all(|r| r.upper.is_none()));
}

#[test]
fn scan_writes_identical_bytes_to_file_and_stdout() {
    let dir = std::env::temp_dir().join("gtrig-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let path_str = path.to_str().unwrap();

    let args = ["scan", "--p", "3", "--q", "3", "--from", "0.1", "--to", "2.4", "--n", "25"];
    let streamed = stdout(&run(&args));
    let mut with_out: Vec<&str> = args.to_vec();
    with_out.extend_from_slice(&["--out", path_str]);
    let out = run(&with_out);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty(), "file mode should not echo the table");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, streamed);
    std::fs::remove_file(&path).ok();
}

#[test]
fn scan_to_unwritable_path_exits_4() {
    let out = run(&[
        "scan", "--p", "2", "--q", "2", "--from", "0.1", "--to", "1.0", "--n", "5",
        "--out", "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn tolerance_flag_rejects_nonsense() {
    let out = run(&["eval", "--fn", "sin", "--p", "2", "--q", "2", "--x", "1", "--tol", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}
