//! End-to-end tests of the command-line interface, including exit codes
//! and the machine-readable output schema.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quotient"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn kappa_reports_profile() {
    let out = run(&["kappa", "a*b", "--alphabet", "ab"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("kappa: 3"));
    assert!(text.contains("has_epsilon_quotient: true"));
}

#[test]
fn kappa_of_the_empty_language() {
    let out = run(&["kappa", "@", "--alphabet", "ab"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kappa: 1"));
    assert!(stdout(&out).contains("is_empty_language: true"));
}

#[test]
fn kappa_of_universal_via_complement() {
    let out = run(&["kappa", "!@", "--alphabet", "ab"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kappa: 1"));
}

#[test]
fn kappa_json_uses_the_profile_field_names() {
    let out = run(&["kappa", "a*b", "--alphabet", "ab", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for field in [
        "kappa",
        "accepting_count",
        "has_empty_quotient",
        "has_universal_quotient",
        "has_epsilon_quotient",
        "has_sigma_plus_quotient",
        "ur_tree",
        "ur_accepting_count",
        "ur_rejecting_count",
        "is_suffix_free",
        "is_finite",
        "is_empty_language",
    ] {
        assert!(v.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(v["kappa"], 3);
}

#[test]
fn derive_examples() {
    let out = run(&["derive", "ab", "a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "b");

    let out = run(&["derive", "a*b", "aab"]);
    assert_eq!(stdout(&out).trim(), "_");

    let out = run(&["derive", "ab", ""]);
    assert_eq!(stdout(&out).trim(), "ab");
}

#[test]
fn bound_examples() {
    let out = run(&["bound", "thm3.boolean", "m=7", "n=5", "mu=4", "nu=3", "r=2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "11");

    let out = run(&["bound", "thm2.product.c", "m=3", "n=3", "k=1"]);
    assert_eq!(stdout(&out).trim(), "20");

    let out = run(&["bound", "prop5.star", "n=4", "l=1"]);
    assert_eq!(stdout(&out).trim(), "7");

    let out = run(&["bound", "thm3.product", "m=7", "n=5", "k=2", "s=3", "t=1"]);
    assert_eq!(stdout(&out).trim(), "84");
}

#[test]
fn bound_errors_are_usage_errors() {
    assert_eq!(run(&["bound", "no.such.bound"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "thm2.boolean", "m=3"]).status.code(), Some(2));
    assert_eq!(
        run(&["bound", "thm2.boolean", "m=3", "n=x"]).status.code(),
        Some(2)
    );
}

#[test]
fn witness_check_reports_tightness() {
    let out = run(&["witness", "union.binary", "3", "3", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("expected 9, measured 9, TIGHT"));

    let out = run(&["witness", "star.unary", "4", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("expected 10, measured 10, TIGHT"));

    let out = run(&[
        "witness",
        "suffixfree.intersection.marked",
        "4",
        "4",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("expected 6, measured 6, TIGHT"));
}

#[test]
fn witness_mismatch_exits_nonzero() {
    // the unary star witness degenerates at n = 2: the starred language
    // is a*, one quotient, below the claimed formula value
    let out = run(&["witness", "star.unary", "2", "--check"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn verify_exit_codes_and_rendering() {
    let out = run(&["verify", "union", "a*b", "ab"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("measured kappa: 3"));
    assert!(text.contains("thm2.boolean"));

    let out = run(&["verify", "symdiff", "a", "a"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("measured kappa: 1"));

    let out = run(&["verify", "star", "((a|b)(a|b))*", "--alphabet", "ab"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_json_schema() {
    let out = run(&[
        "verify", "union", "a*b", "ab", "--alphabet", "ab", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for field in [
        "operands",
        "alphabet",
        "operation",
        "measured_kappa",
        "operand_profiles",
        "result_flags",
        "bounds",
    ] {
        assert!(v.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(v["operation"], "union");
    assert_eq!(v["operand_profiles"][0]["kappa"], 3);
}

#[test]
fn table_sweeps() {
    let out = run(&["table", "star.binary", "n=3..6", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for row in ["6         6", "12        12", "24        24", "48        48"] {
        assert!(text.contains(row), "missing row {row} in:\n{text}");
    }

    // empty range: empty table, success
    let out = run(&["table", "star.binary", "n=7..6"]);
    assert_eq!(out.status.code(), Some(0));

    // non-coprime cells are skipped in the unary sweep
    let out = run(&["table", "union.unary", "m=2..3", "n=2..3", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2,3"));
    assert!(!text.contains("2,2"));
}

#[test]
fn campaign_exit_codes() {
    let out = run(&["campaign", "--seed", "1", "--samples", "10", "--size", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations: 0"));

    let out = run(&[
        "campaign",
        "--seed",
        "1",
        "--samples",
        "2",
        "--size",
        "3",
        "--self-test-failure",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn campaign_json_has_tightness_counters() {
    let out = run(&[
        "campaign", "--seed", "1", "--samples", "10", "--size", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["bound_stats"].is_object());
    let stats = v["bound_stats"].as_object().unwrap();
    assert!(stats.values().all(|s| s.get("applicable").is_some() && s.get("tight").is_some()));
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["kappa", "a|", "--alphabet", "ab"]).status.code(), Some(2));
    assert_eq!(run(&["kappa", "ax", "--alphabet", "ab"]).status.code(), Some(2));
    assert_eq!(run(&["nope"]).status.code(), Some(2));
}

#[test]
fn complement_requires_an_alphabet() {
    let out = run(&["kappa", "!a"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("--alphabet"), "stderr: {err}");
    // with the flag it works
    let out = run(&["kappa", "!a", "--alphabet", "ab"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cap_exceeded_exits_3() {
    let out = run(&["kappa", "a*b", "--alphabet", "ab", "--max-states", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dfa_files_are_accepted_where_regexes_are() {
    let dir = std::env::temp_dir().join(format!("quotient-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("parity.dfa");
    // odd number of a's
    std::fs::write(&path, "dfa 2 ab\ninitial 0\naccepting 1\n0: 1 0\n1: 0 1\n").unwrap();
    let arg = format!("@file:{}", path.display());

    let out = run(&["kappa", &arg]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kappa: 2"));

    let out = run(&["derive", &arg, "a"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dfa 2 ab"));
    assert!(stdout(&out).contains("initial 0"));

    let out = run(&["verify", "union", &arg, &arg]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("measured kappa: 2"));

    // product needs the derivative path, so automaton operands are refused
    let out = run(&["verify", "product", &arg, &arg]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bound_and_witness_listings() {
    let out = run(&["bound", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("thm3.boolean"));
    assert!(stdout(&out).contains("cor2.intersection"));

    let out = run(&["witness", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("union.binary"));
    assert!(stdout(&out).contains("suffixfree.intersection.marked"));
}
