//! Drives the `nncalc` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nncalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nncalc"))
        .args(args)
        .env_remove("NNCALC_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Data rows of a CSV table, header stripped.
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap_or_else(|_| panic!("not a number: {s}"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nncalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn mixed_two_plus_two() {
    let out = stdout(&nncalc(&[
        "arith", "--gen", "log", "--lhs-gen", "identity", "--rhs-gen", "identity", "--lhs", "2", "--rhs", "2",
    ]));
    let r = rows(&out);
    let value = num(&r[0][4]);
    assert!((value - 4f64.exp()).abs() <= 1e-12 * 4f64.exp());
}

#[test]
fn log_arithmetic_adds_by_multiplying() {
    let out = stdout(&nncalc(&["arith", "--gen", "log", "--op", "add", "--lhs", "2", "--rhs", "3"]));
    assert!((num(&rows(&out)[0][4]) - 6.0).abs() < 1e-12);
}

#[test]
fn json_format_parses() {
    let out = stdout(&nncalc(&["--format", "json", "arith", "--gen", "log", "--lhs", "2", "--rhs", "2"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["columns"][4], "result");
    assert!((v["rows"][0][4].as_f64().unwrap() - 4.0).abs() < 1e-12);
}

#[test]
fn fig1_tails_agree() {
    let out = stdout(&nncalc(&["fig1"]));
    let r = rows(&out);
    assert_eq!(r.len(), 200);
    let first = &r[0];
    assert!((num(&first[0]) - 0.01).abs() < 1e-15);
    let last = r.last().unwrap();
    let (x, a, b) = (num(&last[0]), num(&last[1]), num(&last[2]));
    assert!((x - 1e4).abs() < 1e-8);
    // independent closed forms at x = 1e4, κ = 1
    let kexp = (-x).asinh().exp();
    assert!((a - kexp).abs() <= 1e-12 * kexp);
    assert!((b - kexp.sinh()).abs() <= 1e-12 * kexp);
    // both decay like 1/(2x)
    assert!((a * 2.0 * x - 1.0).abs() < 1e-4 && (b / a - 1.0).abs() < 1e-8);
}

#[test]
fn cosmo_kappa_report() {
    assert_eq!(stdout(&nncalc(&["cosmo", "--report-kappa"])), "1.2550\n");
}

#[test]
fn cosmo_columns_agree() {
    let out = stdout(&nncalc(&["cosmo", "--every", "500"]));
    for row in rows(&out) {
        let (closed, integrated, standard) = (num(&row[1]), num(&row[2]), num(&row[3]));
        assert!((closed - standard).abs() <= 1e-12 * standard);
        assert!((integrated - closed).abs() <= 1e-8 * closed);
    }
}

#[test]
fn seeded_runs_are_byte_identical() {
    let a = nncalc(&["--seed", "11", "entropy", "--random", "6"]);
    let b = nncalc(&["--seed", "11", "entropy", "--random", "6"]);
    let c = nncalc(&["--seed", "12", "entropy", "--random", "6"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn env_seed_overrides_flag() {
    let via_env = Command::new(env!("CARGO_BIN_EXE_nncalc"))
        .args(["--seed", "1", "entropy", "--random", "5"])
        .env("NNCALC_SEED", "42")
        .output()
        .unwrap();
    let via_flag = nncalc(&["--seed", "42", "entropy", "--random", "5"]);
    assert_eq!(stdout(&via_env), stdout(&via_flag));
}

#[test]
fn config_replays_the_run() {
    let args = ["--seed", "5", "knmean", "--gen", "renyi:q=2"];
    let direct = stdout(&nncalc(&args));
    let mut dump_args = vec!["--dump-config"];
    dump_args.extend_from_slice(&args);
    let cfg = stdout(&nncalc(&dump_args));
    let path = scratch("run.json");
    std::fs::write(&path, cfg).unwrap();
    let replay = stdout(&nncalc(&["--config", path.to_str().unwrap()]));
    assert_eq!(direct, replay);
}

#[test]
fn output_file_gets_the_table() {
    let path = scratch("arith.csv");
    let out = nncalc(&["--output", path.to_str().unwrap(), "arith", "--lhs", "1", "--rhs", "2"]);
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!((num(&rows(&written)[0][4]) - 3.0).abs() < 1e-15);
}

#[test]
fn selfcheck_passes() {
    let out = stdout(&nncalc(&["selfcheck", "--cases", "20"]));
    for row in rows(&out) {
        assert_eq!(row[2], "0", "{}", row[0]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(nncalc(&["--help"]).status.code(), Some(0));
    assert_eq!(nncalc(&["bogus"]).status.code(), Some(1));
    assert_eq!(nncalc(&["arith", "--op", "nope"]).status.code(), Some(1));
    // κ < 0 is a domain error, not a usage error
    assert_eq!(nncalc(&["fig1", "--kappa", "-1"]).status.code(), Some(2));
    assert_eq!(nncalc(&["arith", "--gen", "log", "--lhs", "-1", "--rhs", "2"]).status.code(), Some(2));
}
