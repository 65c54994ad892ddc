use std::path::Path;
use std::process::Command;

use serde_json::Value;
use seshadri_cli::report::validate_report;
use seshadri_cli::run_args;

/// (golden name, arguments, exit code)
const CASES: &[(&str, &[&str], i32)] = &[
    ("surface_4_2", &["construct-surface", "--d", "4", "--m", "2", "--seed", "1"], 0),
    ("surface_5_3", &["construct-surface", "--d", "5", "--m", "3", "--seed", "1"], 0),
    ("surface_failed", &["construct-surface", "--d", "4", "--m", "2", "--seed", "15", "--coeff-bound", "1", "--max-attempts", "1"], 1),
    ("surface_prechecks", &["construct-surface", "--d", "4", "--m", "2", "--seed", "3", "--modulus", "65521"], 0),
    ("threefold_4", &["construct-threefold", "--d", "4", "--seed", "1"], 0),
    ("enumerate_b_4", &["enumerate", "--d", "4", "--case", "b"], 0),
    ("enumerate_c_5", &["enumerate", "--d", "5", "--case", "c"], 0),
    ("enumerate_surface_4_2", &["enumerate", "--d", "4", "--surface-m", "2"], 0),
    ("analyze_cone", &["analyze", "tests/golden/inputs/cone.txt", "--point", "0,0,0"], 0),
    ("analyze_shifted_cone", &["analyze", "tests/golden/inputs/shifted_cone.txt", "--point", "1,2,-1"], 0),
    ("analyze_quartic", &["analyze", "tests/golden/inputs/quartic.txt", "--point", "0,0,0"], 0),
    ("analyze_threefold", &["analyze", "tests/golden/inputs/threefold.txt", "--point", "0,0,0,0"], 0),
    ("certify_quartic_slice", &["certify", "tests/golden/inputs/quartic.txt", "--point", "0,0,0", "--slice"], 0),
    ("certify_cone", &["certify", "tests/golden/inputs/cone.txt", "--point", "0,0,0"], 0),
];

const TEXT_CASES: &[(&str, &[&str])] = &[
    ("enumerate_b_4", &["enumerate", "--d", "4", "--case", "b", "--output", "text"]),
    ("certify_quartic_slice", &["certify", "tests/golden/inputs/quartic.txt", "--point", "0,0,0", "--slice", "--output", "text"]),
];

fn run(args: &[&str]) -> (String, String, i32) {
    run_args(std::iter::once("seshadri").chain(args.iter().copied()))
}

fn compare(path: &Path, actual: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn golden_json_reports() {
    for (name, args, code) in CASES {
        let (out, err, exit) = run(args);
        assert_eq!(exit, *code, "{name}: {err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        validate_report(&v).unwrap_or_else(|e| panic!("{name}: {e}"));
        compare(&Path::new("tests/golden").join(format!("{name}.json")), &out);
    }
}

#[test]
fn golden_text_reports() {
    for (name, args) in TEXT_CASES {
        let (out, _, exit) = run(args);
        assert_eq!(exit, 0);
        compare(&Path::new("tests/golden").join(format!("{name}.txt")), &out);
    }
}

#[test]
fn golden_files_are_schema_valid() {
    for entry in std::fs::read_dir("tests/golden").unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
            validate_report(&v).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        }
    }
}

#[test]
fn exit_status_follows_report() {
    for (name, args, code) in CASES {
        let (out, _, _) = run(args);
        let v: Value = serde_json::from_str(&out).unwrap();
        let failed = v["checks"].as_array().unwrap().iter().any(|c| c["status"] == "fail");
        assert_eq!(failed, *code == 1, "{name}");
    }
}

#[test]
fn surface_epsilon_is_exact() {
    let (out, _, _) = run(&["construct-surface", "--d", "4", "--m", "2", "--seed", "1", "--output", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["certificate"]["epsilon"], serde_json::json!({"num": 4, "den": 3}));
    assert_eq!(v["certificate"]["kind"], "D_OVER_D_MINUS_1");
    assert_eq!(v["elapsed_ms"], Value::Null);
}

#[test]
fn cone_has_a_line() {
    let (out, _, _) = run(&["analyze", "tests/golden/inputs/cone.txt", "--point", "0,0,0"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let line = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "line-through-point").unwrap();
    assert_eq!(line["data"]["contains_line"], true);
    assert_eq!(v["certificate"]["kind"], "LINE_PRESENT");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "vars: x,y\nx^\n").unwrap();
    let bad = bad.to_str().unwrap();
    let cases: &[&[&str]] = &[
        &["construct-surface", "--d", "4", "--m", "3"],
        &["construct-threefold", "--d", "3"],
        &["construct-surface", "--d", "4"],
        &["enumerate", "--d", "4"],
        &["enumerate", "--d", "4", "--case", "b", "--surface-m", "2"],
        &["enumerate", "--d", "3", "--case", "b"],
        &["analyze", bad, "--point", "0,0"],
        &["analyze", "tests/golden/inputs/cone.txt", "--point", "1,1,0"],
        &["analyze", "tests/golden/inputs/cone.txt", "--point", "0,0"],
        &["analyze", "tests/golden/inputs/cone.txt", "--point", "0,1/0,0"],
        &["analyze", "missing.txt", "--point", "0"],
        &["certify", "tests/golden/inputs/threefold.txt", "--point", "0,0,0,0", "--slice"],
        &["construct-surface", "--d", "4", "--m", "2", "--modulus", "12"],
        &["bogus"],
    ];
    for args in cases {
        let (out, err, code) = run(args);
        assert_eq!(code, 2, "{args:?}: {out}{err}");
        assert!(out.is_empty() && !err.is_empty());
    }
    let (_, err, _) = run(&["analyze", bad, "--point", "0,0"]);
    assert!(err.contains("2:2"), "{err}");
}

#[test]
fn budget_exhaustion_exits_3() {
    let (_, err, code) = run(&["construct-surface", "--d", "5", "--m", "2", "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(err.contains("budget"));
}

#[test]
fn timing_is_opt_in() {
    let (out, _, _) = run(&["enumerate", "--d", "4", "--case", "b", "--timing"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_seshadri");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["enumerate", "--d", "4", "--case", "b"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), std::fs::read_to_string("tests/golden/enumerate_b_4.json").unwrap());
    assert_eq!(status(&["construct-surface", "--d", "4", "--m", "2", "--seed", "15", "--coeff-bound", "1", "--max-attempts", "1"]).status.code(), Some(1));
    assert_eq!(status(&["enumerate", "--d", "4"]).status.code(), Some(2));
    assert_eq!(status(&["construct-surface", "--d", "5", "--m", "2", "--budget", "10"]).status.code(), Some(3));
    assert_eq!(status(&["--version"]).status.code(), Some(0));
}
