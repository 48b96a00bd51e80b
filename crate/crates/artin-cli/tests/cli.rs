use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin-rd")).args(args).env_remove("ARTIN_CACHE_DIR").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(&[args, &["--json"]].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn empty_word_is_identity_with_empty_log() {
    let v = json(&["nf", ""]);
    assert_eq!(v["normal_form"], "1");
    assert_eq!(v["length"], 0);
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);
}

#[test]
fn normal_form_of_the_length_fifteen_word() {
    let v = json(&["nf", "a b^-2 a^-1 c b^2 c^-1 b^-1 a c a^2 c a^-1"]);
    assert_eq!(v["normal_form"], "BAACBccbaccac");
    assert_eq!(v["steps"].as_array().unwrap().last().unwrap()["kind"], "rightward");
}

#[test]
fn precondition_failures_give_error_json() {
    for (args, kind) in [
        (&["nf", "q"][..], "parse"),
        (&["-p", "tri-433", "merge", "ab", "ba"][..], "hypothesis_33m"),
        (&["-p", "missing", "nf", "a"][..], "unknown_preset"),
        (&["divisors", "ab", "1", "1"][..], "bad_pair"),
        (&["--order", "aab", "nf", "a"][..], "bad_order"),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(v["error"]["kind"], kind, "{args:?}");
    }
}

#[test]
fn repro_paper_passes() {
    let v = json(&["repro-paper"]);
    assert_eq!(v["passed"], true, "{v:#}");
}

#[test]
fn d1_scan_writes_csv() {
    let dir = std::env::temp_dir().join(format!("artin-cli-d1-{}", std::process::id()));
    let out = run(&["-p", "tri-444", "d1-scan", "--radius", "6", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.join("d1_tri-444_r6.csv")).unwrap();
    assert_eq!(csv.as_bytes(), &out.stdout[..]);
    assert!(csv.starts_with("k,l,min,fact,fact_permissible,witness,bound\n"));
    assert!(csv.lines().any(|l| l.starts_with("3,3,3,4,4,")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn ball_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("artin-cli-cache-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let first = json(&["-p", "da4", "ball", "5", "--cache-dir", d]);
    let second = json(&["-p", "da4", "ball", "5", "--cache-dir", d]);
    assert_eq!(first["from_cache"], false);
    assert_eq!(second["from_cache"], true);
    assert_eq!(first["sphere_sizes"], second["sphere_sizes"]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn divisors_report_the_tail_failure_in_counterexample_mode() {
    let v = json(&["-p", "tri-433", "--allow-counterexample", "divisors", "babacabab", "1", "2"]);
    assert_eq!(v["ld"], "abab");
    assert!(v["ld_prime_error"].as_str().unwrap().contains("not unique"));
}
