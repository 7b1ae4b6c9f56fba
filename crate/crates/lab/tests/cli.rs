use std::path::PathBuf;
use std::process::{Command, Output};

use micz_core::dynsym::Status;
use micz_core::exact::Rational;
use micz_lab::record::Record;
use micz_lab::suites::all_passed;
use serde_json::Value;

fn micz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_micz")).args(args).env_remove("MICZ_JOBS").output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).expect("golden file")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn spectrum_example() {
    let out = micz(&["spectrum", "--n", "1", "--mu", "0", "--imax", "3"]);
    assert!(out.status.success());
    let rows = lines(&out);
    let e: Vec<&str> = rows.iter().map(|r| r["detail"]["energy"].as_str().unwrap()).collect();
    assert_eq!(e, ["-1/2", "-1/8", "-1/18", "-1/32"]);
    let d: Vec<u64> = rows.iter().map(|r| r["detail"]["dim"].as_u64().unwrap()).collect();
    assert_eq!(d, [1, 4, 9, 16]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("spectrum_n1_mu0.jsonl"));
}

#[test]
fn commutators_example() {
    let out = micz(&["verify", "commutators", "--n", "1", "--mu", "1/2", "--seed", "7"]);
    assert!(out.status.success());
    let rows = lines(&out);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["status"] == "exact-pass" && r["residual_terms"] == 0 && r["seed"] == 7));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("commutators_n1_mu1-2_seed7.jsonl"));
}

#[test]
fn expectation_example() {
    let out = micz(&["expectation", "--n", "1", "--mu", "1/2", "--imax", "2"]);
    assert!(out.status.success());
    let rows = lines(&out);
    assert_eq!(rows.len(), 3);
    for r in &rows {
        assert_eq!(r["detail"]["beta_chain"], "1/2");
        assert_eq!(r["detail"]["zonal"], "1/2");
    }
}

#[test]
fn markdown_golden() {
    let out = micz(&["degeneracy", "--n", "1", "--mu", "1/2", "--format", "markdown"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("degeneracy_n1_mu1-2.md"));
}

#[test]
fn negative_mu_and_schema() {
    let out = micz(&["branch", "--n", "2", "--mu", "-1/2", "--imax", "1"]);
    assert!(out.status.success());
    for r in lines(&out) {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["check", "detail", "elapsed_ms", "mu", "n", "params", "residual_terms", "seed", "status"]);
        assert_eq!(r["mu"], "-1/2");
        assert!(r["elapsed_ms"].is_null());
    }
}

#[test]
fn timings_are_opt_in() {
    let out = micz(&["spectrum", "--n", "1", "--mu", "0", "--imax", "0", "--timings"]);
    assert!(lines(&out)[0]["elapsed_ms"].is_u64());
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["verify", "lemma2", "quadratic", "--n", "1", "--battery-size", "6", "--seed", "3"];
    let one = micz(&[&args[..], &["--jobs", "1"]].concat());
    let four = micz(&[&args[..], &["--jobs", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_micz")).args(args).env("MICZ_JOBS", "2").output().unwrap();
    assert_eq!(one.stdout, env.stdout);
}

#[test]
fn seed_changes_battery() {
    let a = micz(&["verify", "lemma2", "--n", "1", "--mu", "0", "--battery-size", "3", "--seed", "1"]);
    let b = micz(&["verify", "lemma2", "--n", "1", "--mu", "0", "--battery-size", "3", "--seed", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn rejects_bad_input() {
    for args in [
        vec!["spectrum", "--n", "3"],
        vec!["spectrum", "--mu", "1/3"],
        vec!["spectrum", "--mu", "5/2"],
        vec!["spectrum", "--mu", "0.5"],
        vec!["verify", "nonsense"],
        vec!["verify", "lemma1", "--battery-size", "0"],
    ] {
        let out = micz(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn failing_record_fails_the_run() {
    let ok = Record::new("spectrum", 1, &Rational::ZERO, 0);
    let bad = Record::new("spectrum", 1, &Rational::ZERO, 0).status(Status::Fail);
    let eval = Record::new("lemma1", 1, &Rational::ZERO, 0).status(Status::EvalPass);
    assert!(all_passed(&[ok.clone(), eval]));
    assert!(!all_passed(&[ok, bad]));
}
