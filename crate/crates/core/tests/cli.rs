use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

const BIN: &str = env!("CARGO_BIN_EXE_quadric-moduli");
const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn parse(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn malformed_json_exits_with_schema_error() {
    let out = run(&["classify-potential"], Some("{not json"));
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(parse(&out)["error"]["kind"], "schema");
    let out = run(&["classify-quintuple"], Some(r#"[[["1"]]]"#));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_3() {
    let out = run(&["map-potential", &data("degenerate.json")], None);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(parse(&out)["error"]["variant"], "Unstable");
}

#[test]
fn classify_the_conifold_potential() {
    let out = run(&["classify-potential", &data("conifold.json")], None);
    assert_eq!(out.status.code(), Some(0));
    let v = parse(&out);
    assert_eq!(v["f"], json!(["2", "1", "1/2", "1/4"]));
    assert_eq!(v["stability"], "semistable");
}

#[test]
fn hilbert_to_degree_eight() {
    let out = run(&["hilbert", "--from", "v0", "--to", "v0", "--max", "8", &data("conifold.json")], None);
    assert_eq!(parse(&out), json!({"dims": [1, 0, 4, 0, 9, 0, 16, 0, 25]}));
}

#[test]
fn dt_count_report() {
    let out = run(&["dt-count", "--potential", &data("conifold.json"), "--primes", "2,3,5,7", "--theta", "-1,-1,2"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = parse(&out);
    assert_eq!(v["polynomial"], "q^3 + q^2");
    assert_eq!(v["euler_number"], "2");
    let out = run(&["dt-count", "--potential", &data("conifold.json"), "--primes", "2,3"], None);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn elliptic_subcommands() {
    let out = run(&["elliptic", "orbit-test", &data("elliptic_pair.json")], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(parse(&out)["equivalent"], true);
    let out = run(&["elliptic", "check", &data("elliptic_config.json")], None);
    let v = parse(&out);
    assert_eq!(v["on_curve"], json!([true, true]));
    assert_eq!(v["admissible"], true);
}

#[test]
fn outputs_are_deterministic_and_reparse() {
    let a = run(&["map-potential", &data("conifold.json")], None);
    let b = run(&["map-potential", &data("conifold.json")], None);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let c = run(&["classify-quintuple"], Some(&text));
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(parse(&c)["stability"], "stable");
}
