use std::io::Write;
use std::process::{Command, Stdio};

use lacunary::cli::{run_args, Outcome};
use serde_json::Value;

fn run(args: &[&str], input: &str) -> Outcome {
    let owned = input.as_bytes().to_vec();
    let mut argv = vec!["lacunary"];
    argv.extend_from_slice(args);
    run_args(argv, move || Ok(owned))
}

fn json(args: &[&str], input: &str) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(&a, input);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn factor_json_schema() {
    let v = json(
        &["factor", "-d", "2"],
        "x^3*y*(x + y + 1)^2*(x^1000000000 + y + 3)",
    );
    assert_eq!(v["x_mult"], "3");
    assert_eq!(v["y_mult"], "1");
    assert_eq!(v["heuristic"], false);
    assert!(v["untested"].as_array().unwrap().is_empty());
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0]["mult"], 2);
    assert_eq!(factors[0]["class"], "general");
    assert_eq!(factors[0]["poly"]["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn json_input_round_trip() {
    let input = r#"{"terms":[{"c":"1","ex":"1","ey":"0"},{"c":"-1","ex":"0","ey":"1"}]}"#;
    let v = json(&["factor", "--format", "json"], input);
    assert_eq!(v["factors"][0]["class"], "cyclotomic");
}

#[test]
fn univariate_command() {
    let v = json(&["univariate", "-d", "2"], "(x - 1)^2*(x^1000000 + 3)");
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0]["mult"], 2);
    assert_eq!(factors[0]["class"], "cyclotomic");
    let same = json(&["factor", "--univariate", "-d", "2"], "(x - 1)^2*(x^1000000 + 3)");
    assert_eq!(v, same);
}

#[test]
fn binomial_command() {
    let v = json(&["binomial", "-d", "2"], "(x*y - 2)^3*(x^1000000 + y^3 + 1)");
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0]["mult"], 3);
    assert_eq!(factors[0]["class"], "binomial");
}

#[test]
fn decompose_command() {
    let v = json(&["decompose", "--heuristic-delta", "10"], "x + 1 + x^100*y^3 + 2*x^101*y^3");
    let pieces = v["pieces"].as_array().unwrap();
    assert_eq!(pieces.len(), 2);
    assert_eq!(pieces[1]["gamma"], "100");
    assert_eq!(pieces[1]["delta"], "3");
}

#[test]
fn bounds_command() {
    let v = json(&["bounds"], "x + y + 1");
    assert_eq!(v["n"], 2);
    assert_eq!(v["degree"], "1");
    assert_eq!(v["delta_rational"], "461671");
    let one = json(&["bounds", "--vars", "1"], "x + y + 1");
    assert_eq!(one["n"], 1);
}

#[test]
fn test_linear_command() {
    let f = "(2*x - y + 3)*(x^100000 + y^100000 + 5)";
    let v = json(&["test-linear", "--candidate", "-2,1,-3", "--adaptive"], f);
    assert_eq!(v["results"][0]["divides"], true);
    let v = json(&["test-linear", "--height", "3", "--adaptive"], f);
    let hits: Vec<_> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["divides"] == true)
        .collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["a"], "-2");
    let bad = run(&["test-linear", "--candidate", "1,2"], f);
    assert_eq!(bad.code, 4);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["factor"], "x + * y").code, 2);
    assert_eq!(run(&["factor", "--format", "json"], "{}").code, 2);
    assert_eq!(run(&["factor", "-d", "0"], "x + 1").code, 4);
    assert_eq!(run(&["factor", "--dense-limit", "0"], "x + 1").code, 4);
    assert_eq!(run(&["factor", "--bogus"], "x + 1").code, 4);
    assert_eq!(run(&["factor"], "0").code, 4);

    let f = "(x + y + 1)*(x^30 + y^29 + 3)";
    let lenient = run(&["factor", "--dense-limit", "20"], f);
    assert_eq!(lenient.code, 0);
    assert!(lenient.stderr.contains("untested"));
    assert_eq!(run(&["factor", "--dense-limit", "20", "--strict"], f).code, 3);
    assert_eq!(run(&["--help"], "").code, 0);
}

#[test]
fn text_output() {
    let out = run(&["factor", "-d", "4"], "(x^5 - y^5)*(x^100000000 + y^3 + 1)");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("delta:"));
    assert!(out.stdout.contains("cyclotomic"));
    let out = run(&["factor", "--heuristic-delta", "50"], "x + 2*y + 3");
    assert!(out.stdout.contains("heuristic"));
}

#[test]
fn binary_reads_stdin_and_files() {
    let exe = env!("CARGO_BIN_EXE_lacunary");
    let mut child = Command::new(exe)
        .args(["factor", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x - 2*y").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["factors"][0]["class"], "binomial");

    let dir = std::env::temp_dir().join(format!("lacunary-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.txt");
    std::fs::write(&path, "x + y").unwrap();
    let out = Command::new(exe)
        .args(["factor", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("multiplicity 1"));
    let out = Command::new(exe).args(["factor", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    std::fs::remove_dir_all(&dir).unwrap();
}
