use std::path::PathBuf;

use iomkit::format::parse_alg;
use iomkit_cli::{run_command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    run_command(std::iter::once("iomkit").chain(args.iter().copied()))
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("iomkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["search"]).code, 2);
    assert_eq!(run(&["search", "--size", "9"]).code, 2);
    assert_eq!(run(&["search", "--size", "4", "--require", "iom", "--forbid", "iom"]).code, 2);
    assert_eq!(run(&["laws", &fixture("e5.alg"), "--suite", "nope"]).code, 2);
    let out = run(&["congruence", &fixture("e5.alg"), "--ds", "d"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("unknown element name \"d\""));
}

#[test]
fn parse_errors_carry_positions() {
    let p = temp_file("broken.alg", "elements: 0 1\nzero: 0\narrow:\n1 1\n0 1\n");
    let out = run(&["classify", p.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains(":2:1: missing `one:` header"), "{}", out.stderr);

    let p = temp_file("bad-row.alg", "elements: 0 1\none: 1\nzero: 0\narrow:\n1 1\n0 q\n");
    let out = run(&["classify", p.to_str().unwrap()]);
    assert!(out.stderr.contains(":6:3: unknown element name \"q\""), "{}", out.stderr);
}

#[test]
fn state_range_error_is_a_parse_error() {
    let out = run(&["state", &fixture("b2.alg"), "--values", "0=0, 1=2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("outside [0,1]"));
}

#[test]
fn failed_checks_exit_one_with_witness() {
    let out = run(&["congruence", &fixture("e5.alg"), "--ds", "a,1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("DS2 fails at x=a, y=c"));
    let out = run(&["state", &fixture("e5.alg"), "--values", "0=0, a=1, b=1, c=1, 1=1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("bs2 fails at x=a, y=0"));
}

#[test]
fn json_has_stable_keys_and_matches_text() {
    let e5 = fixture("e5.alg");
    let out = run(&["--json", "congruence", &e5, "--ds", "a,1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    for key in ["command", "algebra", "results", "witnesses", "census"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let text = run(&["congruence", &e5, "--ds", "a,1"]).stdout;
    for w in v["witnesses"].as_array().unwrap() {
        let line = format!("{} fails at {}", w["check"].as_str().unwrap(), w["detail"].as_str().unwrap());
        assert!(text.contains(&line), "{line} not in {text}");
    }
}

#[test]
fn quotient_output_file_parses() {
    let target = temp_file("q.alg", "");
    let out = run(&["quotient", &fixture("e5.alg"), "--ds", "1", "-o", target.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let q = parse_alg(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(q.names(), ["{0}", "{a}", "{b}", "{c}", "{1}"]);
    let again = run(&["congruence", target.to_str().unwrap(), "--ds", "{1}"]);
    assert_eq!(again.code, 0, "{}", again.stdout);
}

#[test]
fn search_respects_limit() {
    let out = run(&["search", "--size", "4", "--limit", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.matches("# model").count(), 2);
}

#[test]
fn seedless_is_accepted() {
    let a = run(&["--seedless", "--json", "search", "--size", "3"]);
    let b = run(&["--json", "search", "--size", "3"]);
    assert_eq!(a, b);
}
