//! Golden-file checks for the command-line surface: every recorded
//! output must be reproduced byte for byte by a fresh subprocess, twice,
//! and parse as JSON. Exit codes are checked at the process level.

mod common;

use serde_json::Value;

const GOLDEN_RUNS: &[(&str, &[&str])] = &[
    (
        "tf.json",
        &[
            "tf", "--surface", "quadric", "--c1", "1,1", "--c2", "2", "--window", "-2..2,-2..2",
            "--format", "json",
        ],
    ),
    (
        "bn.json",
        &["bn", "--surface", "quadric", "--e", "2,1", "--N", "4", "--check", "--format", "json"],
    ),
    (
        "chi.json",
        &["chi", "--surface", "p2", "--c1", "4", "--c2", "3", "--rank", "2", "--pair", "--format", "json"],
    ),
    (
        "cohom.json",
        &["cohom", "--surface", "quadric", "--c1", "-2,3", "--format", "json"],
    ),
    (
        "verify.json",
        &[
            "verify", "--surface", "quadric", "--e", "2,1", "--N", "4", "--samples", "5", "--seed",
            "1", "--format", "json",
        ],
    ),
    (
        "cross.json",
        &[
            "verify", "--cross-ruling", "--c1", "1,1", "--c2", "2", "--window", "-2..2,-2..2",
            "--format", "json",
        ],
    ),
    (
        "survey_bn.jsonl",
        &["survey", "bn", "--surface", "p2", "--e", "4", "--N", "1..15", "--format", "json"],
    ),
    (
        "survey_tf.jsonl",
        &[
            "survey", "tf", "--surface", "quadric", "--c1", "1,1", "--c2", "0..5", "--window",
            "-3..3,-3..3", "--format", "json",
        ],
    ),
];

#[test]
fn golden_outputs_are_reproduced_exactly() {
    for (golden, args) in GOLDEN_RUNS {
        let (code, stdout, stderr) = common::run_cli(args);
        assert_eq!(code, 0, "{golden}: cli failed: {stderr}");
        let expected = common::read_golden(golden);
        assert_eq!(stdout, expected, "{golden} drifted from the recorded output");
        let (_, again, _) = common::run_cli(args);
        assert_eq!(stdout, again, "{golden}: output not deterministic");
    }
}

#[test]
fn golden_outputs_parse_as_json() {
    for (golden, _) in GOLDEN_RUNS {
        let text = common::read_golden(golden);
        if golden.ends_with(".jsonl") {
            for (i, line) in text.lines().enumerate() {
                serde_json::from_str::<Value>(line)
                    .unwrap_or_else(|e| panic!("{golden} line {}: {e}", i + 1));
            }
        } else {
            serde_json::from_str::<Value>(&text).unwrap_or_else(|e| panic!("{golden}: {e}"));
        }
    }
}

#[test]
fn table_format_runs_everywhere_json_does() {
    for (golden, args) in GOLDEN_RUNS {
        let mut table_args: Vec<&str> = args.to_vec();
        let pos = table_args.iter().position(|a| *a == "json").unwrap();
        table_args[pos] = "table";
        let (code, stdout, stderr) = common::run_cli(&table_args);
        assert_eq!(code, 0, "{golden} table mode failed: {stderr}");
        assert!(!stdout.is_empty(), "{golden} table mode printed nothing");
    }
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["bn", "--surface", "p2", "--e", "2", "--N", "99"] as &[&str],
        &["bn", "--surface", "p2", "--e", "2", "--N", "0"],
        &["tf", "--surface", "p2", "--c2", "1"],
        &["chi", "--surface", "p3", "--c1", "1"],
        &["tf", "--surface", "quadric", "--c1", "1,1", "--c2", "1", "--window", "-2..2"],
    ] {
        let (code, _, stderr) = common::run_cli(args);
        assert_eq!(code, 2, "args {args:?} gave {code}: {stderr}");
        assert!(!stderr.is_empty(), "args {args:?}: empty stderr");
    }
}

#[test]
fn overflow_exits_three() {
    let (code, _, stderr) = common::run_cli(&["chi", "--surface", "p2", "--c1", "4000000000"]);
    assert_eq!(code, 3, "expected overflow exit: {stderr}");
}

#[test]
fn out_flag_writes_the_stdout_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("roundtrip.json");
    let (golden, args) = &GOLDEN_RUNS[1];
    let mut with_out: Vec<&str> = args.to_vec();
    with_out.push("--out");
    let path_str = path.to_str().unwrap();
    with_out.push(path_str);
    let (code, stdout, stderr) = common::run_cli(&with_out);
    assert_eq!(code, 0, "cli failed: {stderr}");
    assert!(stdout.is_empty(), "--out should silence stdout");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, common::read_golden(golden));
}
