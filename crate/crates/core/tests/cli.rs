//! End-to-end tests of the command-line interface: exit-code contract,
//! output shapes, format agreement, and the scan cache.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

fn semigap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semigap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn member_exit_codes_and_output() {
    let out = semigap(&["member", "397"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "Member, witness a=10 b=27");

    let out = semigap(&["member", "1674"]);
    assert_eq!(exit_code(&out), 2);
    let text = stdout(&out);
    assert!(text.contains("verdict: NonMember"), "{text}");
    assert!(text.contains("a=9"), "rejection table missing: {text}");

    let out = semigap(&["member", "-5"]);
    assert_eq!(exit_code(&out), 1);

    let out = semigap(&["member", "not-a-number"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn member_json_output() {
    let out = semigap(&["member", "89", "--format", "json"]);
    assert_eq!(exit_code(&out), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "non_member");
    assert_eq!(v["rejected"].as_array().unwrap().len(), 0);

    let out = semigap(&["member", "473", "--format", "json"]);
    assert_eq!(exit_code(&out), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rejected"].as_array().unwrap().len(), 5);
}

#[test]
fn gaps_window_output() {
    let out = semigap(&["gaps", "--from", "1301", "--to", "1700"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1320 1332 1350 1560 1674");

    let out = semigap(&["gaps", "--from", "1675", "--to", "2000", "--bound", "2000"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "none");

    let out = semigap(&["gaps", "--from", "0", "--to", "10"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("range"), "{}", stderr(&out));
}

#[test]
fn classes_table_lists_all_maxima() {
    let out = semigap(&["classes"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for row in [
        "| C_1 | 32 |",
        "| C_2 | 1560 |",
        "| C_9 | 1674 |",
        "| C_10 | 1332 |",
        "| Mult11 | 1320 |",
    ] {
        assert!(text.contains(row), "missing {row} in\n{text}");
    }
}

#[test]
fn format_renderings_carry_identical_value_sets() {
    // classes across md/csv/json
    let md = stdout(&semigap(&["classes"]));
    let csv = stdout(&semigap(&["classes", "--format", "csv"]));
    let json = stdout(&semigap(&["classes", "--format", "json"]));
    let md_values: BTreeSet<u64> = md
        .lines()
        .skip(2)
        .filter_map(|l| l.split('|').nth(2)?.trim().parse().ok())
        .collect();
    let csv_values: BTreeSet<u64> = csv
        .lines()
        .skip(1)
        .filter_map(|l| l.split(',').nth(1)?.trim().parse().ok())
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let json_values: BTreeSet<u64> = parsed["classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|c| c["max_gap"].as_u64())
        .collect();
    assert_eq!(md_values, csv_values);
    assert_eq!(md_values, json_values);

    // gaps across md/csv/json
    let args = ["gaps", "--from", "401", "--to", "500"];
    let md = stdout(&semigap(&args));
    let csv = stdout(&semigap(&[&args[..], &["--format", "csv"]].concat()));
    let json = stdout(&semigap(&[&args[..], &["--format", "json"]].concat()));
    let md_gaps: BTreeSet<u64> = md.split_whitespace().map(|v| v.parse().unwrap()).collect();
    let csv_gaps: BTreeSet<u64> = csv.lines().skip(1).map(|v| v.parse().unwrap()).collect();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let json_gaps: BTreeSet<u64> = parsed["gaps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(md_gaps, csv_gaps);
    assert_eq!(md_gaps, json_gaps);
    assert!(md_gaps.contains(&489));

    // table row across md/csv/json
    let args = ["table", "--intervals", "501:600"];
    let md = stdout(&semigap(&args));
    let csv = stdout(&semigap(&[&args[..], &["--format", "csv"]].concat()));
    let json = stdout(&semigap(&[&args[..], &["--format", "json"]].concat()));
    let md_vals: BTreeSet<u64> = md
        .lines()
        .nth(2)
        .unwrap()
        .split(['{', '}'])
        .nth(1)
        .unwrap()
        .split(',')
        .map(|v| v.trim().parse().unwrap())
        .collect();
    let csv_vals: BTreeSet<u64> = csv
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(3)
        .unwrap()
        .split_whitespace()
        .map(|v| v.parse().unwrap())
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let json_vals: BTreeSet<u64> = parsed["intervals"][0]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(md_vals, csv_vals);
    assert_eq!(md_vals, json_vals);
}

#[test]
fn probe_bounded_profile_finds_exponents() {
    let out = semigap(&["probe", "--base", "2", "--a-max", "10", "--limit", "24"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    // the profile in effect is stated, and the exponent list is non-empty
    assert!(text.contains("a_max=10"), "{text}");
    assert!(text.contains("non-member exponents: 1 2 3"), "{text}");

    let out = semigap(&["probe", "--base", "2", "--limit", "64"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("2^64"), "{}", stderr(&out));
}

#[test]
fn certify_exit_codes_follow_verdicts() {
    let out = semigap(&["certify", "397"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "member");
    assert_eq!(v["rule"], "prime");
    assert_eq!(v["verified"], true);

    let out = semigap(&["certify", "89"]);
    assert_eq!(exit_code(&out), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rule"], "classic_frobenius");

    let out = semigap(&["certify", "1674"]);
    assert_eq!(exit_code(&out), 3);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "unknown");
}

#[test]
fn verify_paper_default_passes() {
    let out = semigap(&["verify-paper"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 10, "{text}");
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("result: 10/10 passed"), "{text}");
}

#[test]
fn verify_paper_wrong_instance_fails() {
    let out = semigap(&["verify-paper", "--alpha", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout(&out).contains("FAIL"), "{}", stdout(&out));
}

#[test]
fn verify_paper_small_bound_is_usage_error() {
    let out = semigap(&["verify-paper", "--bound", "1000"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("1700"), "{}", stderr(&out));
}

#[test]
fn scan_summary_and_banner() {
    let out = semigap(&["scan", "--bound", "2000"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("max gap 1674"), "{text}");
    assert!(text.contains("375 gaps"), "{text}");
    assert!(
        text.contains("exhaustive only within [0, 2000]"),
        "missing empirical banner: {text}"
    );
}

#[test]
fn scan_rejects_non_coprime_generators() {
    let out = semigap(&["scan", "--gens", "4,6"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("share the factor 2"), "{}", stderr(&out));
}

#[test]
fn scan_jobs_do_not_change_output() {
    let one = semigap(&["scan", "--bound", "3000", "--jobs", "1"]);
    let eight = semigap(&["scan", "--bound", "3000", "--jobs", "8"]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(stdout(&one), stdout(&eight));
}

#[test]
fn scan_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("scan.bin");
    let cache_arg = cache.to_str().unwrap();

    let first = semigap(&["scan", "--bound", "2000", "--cache", cache_arg]);
    assert_eq!(exit_code(&first), 0);
    assert!(Path::new(cache_arg).exists());

    let second = semigap(&["scan", "--bound", "2000", "--cache", cache_arg]);
    assert_eq!(stdout(&first), stdout(&second));

    // a different profile must not reuse the cache
    let other = semigap(&["scan", "--bound", "2000", "--cache", cache_arg, "--a-min", "1"]);
    assert_eq!(exit_code(&other), 0);
    assert_ne!(stdout(&first), stdout(&other));

    // gaps served through the same cache agree with a cold run
    let cached = semigap(&["gaps", "--from", "1301", "--to", "1700", "--bound", "2000", "--cache", cache_arg]);
    assert_eq!(stdout(&cached).trim(), "1320 1332 1350 1560 1674");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&semigap(&["--help"])), 0);
    assert_eq!(exit_code(&semigap(&["--version"])), 0);
    // unknown subcommand is a usage error
    assert_eq!(exit_code(&semigap(&["frobnicate"])), 1);
}
