//! End-to-end tests of the command-line interface: output shapes, exit
//! codes, determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sympdirac"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn verify_is_deterministic_and_green() {
    let args = ["--n", "2", "--seed", "11", "verify", "--samples", "10"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "stderr: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");
    let text = stdout(&first);
    assert!(text.contains("seed = 11"));
    assert!(text.contains("PASS sl2/ds-xs"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn sabotaged_verify_fails_the_named_law() {
    let out = run(&[
        "--n", "1", "verify", "--samples", "10", "--sabotage-xs-sign",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL sl2/ds-xs"), "{}", text);
}

#[test]
fn decompose_splits_x1() {
    let out = run(&["decompose", "x1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ell = 1, xs_power = 0: 2x1 - x2 q1^2"), "{}", text);
    assert!(text.contains("ell = 0, xs_power = 1: q1"), "{}", text);
    assert!(text.contains("reconstruction: ok"), "{}", text);
}

#[test]
fn decompose_zero_has_no_components() {
    let out = run(&["decompose", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("components: none"));
}

#[test]
fn decompose_monogenic_x2_is_single_slot() {
    let out = run(&["decompose", "x2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ell = 1, xs_power = 0: x2"), "{}", text);
    assert!(text.contains("ell = 0, xs_power = 1: 0"), "{}", text);
}

#[test]
fn decompose_reads_stdin() {
    let mut child = bin()
        .args(["decompose", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"x1 + x2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("reconstruction: ok"));
}

#[test]
fn apply_reads_polynomial_from_file() {
    let dir = std::env::temp_dir().join("sympdirac-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("poly.txt");
    std::fs::write(&path, "2x1 - x2 q1^2").unwrap();
    let out = run(&["apply", "--op", "ds", "--file", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn parse_errors_exit_with_two() {
    let out = run(&["decompose", "x3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1, column 1"));

    let out = run(&["--scalar", "rational", "decompose", "i q1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rational scalar mode"));
}

#[test]
fn dimtable_emits_documented_csv() {
    let out = run(&["--n", "1", "--dmax", "2", "--output", "csv", "dimtable", "--kmax", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,dmax,parity,dim");
    assert!(lines.contains(&"1,0,2,all,3"), "{}", text);
    assert!(lines.contains(&"1,1,2,all,2"), "{}", text);
}

#[test]
fn size_cap_exits_with_three() {
    let out = run(&["--n", "2", "--size-cap", "5", "dimtable", "--kmax", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("size cap exceeded"));
}

#[test]
fn basis_lists_kernel_vectors() {
    let out = run(&["--n", "1", "--dmax", "2", "basis", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kernel dimension = 2"), "{}", text);
    assert!(text.contains("x2"), "{}", text);
    assert!(text.contains("x1 - 1/2x2 q1^2"), "{}", text);
    assert!(text.contains("casimir eigenvalue = -1"), "{}", text);
}

#[test]
fn apply_named_operators() {
    let out = run(&["apply", "--op", "ds", "x1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "q1");

    let out = run(&["apply", "--op", "xs", "q1"]);
    assert_eq!(stdout(&out).trim(), "-x1 + x2 q1^2");

    let out = run(&["apply", "--op", "e:1", "1"]);
    assert_eq!(stdout(&out).trim(), "q1");

    let out = run(&["apply", "--op", "x:1,1", "x1"]);
    assert_eq!(stdout(&out).trim(), "x1");

    let out = run(&["--n", "2", "apply", "--op", "rho:ff:1,2", "x3"]);
    assert!(out.status.success());
    // rho(f1 f2) = Z_12 acts as the vector field x2 d3 + x1 d4.
    assert_eq!(stdout(&out).trim(), "x2");

    let out = run(&["apply", "--op", "l:ee:1,1", "1"]);
    assert_eq!(stdout(&out).trim(), "i q1^2");
}

#[test]
fn apply_rejects_unknown_and_mode_violations() {
    let out = run(&["apply", "--op", "bogus", "x1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown operator"));

    let out = run(&["--scalar", "rational", "apply", "--op", "l:ee:1,1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gaussian"));
}

#[test]
fn coeffs_table_shows_both_values() {
    let out = run(&["coeffs", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("i = 1, j = 0: a = 1,"), "{}", text);
    assert!(text.contains("[differs]"), "{}", text);
    assert!(text.contains("ell = 1: -1"), "{}", text);
}

#[test]
fn json_outputs_are_valid_json() {
    for args in [
        vec!["--output", "json", "decompose", "x1"],
        vec!["--output", "json", "basis", "--k", "1"],
        vec!["--output", "json", "dimtable", "--kmax", "1"],
        vec!["--output", "json", "coeffs", "--k", "1"],
        vec!["--output", "json", "apply", "--op", "ds", "x1"],
        vec!["--n", "1", "--output", "json", "verify", "--samples", "5"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{:?}: {}", args, stderr(&out));
        let parsed: serde_json::Value = serde_json::from_str(&stdout(&out))
            .unwrap_or_else(|e| panic!("{:?} produced invalid json: {}", args, e));
        assert!(!parsed.is_null());
    }
}

#[test]
fn decompose_json_has_exact_rationals() {
    let out = run(&["--output", "json", "decompose", "x1"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["reconstruction_ok"], serde_json::json!(true));
    let comps = doc["parts"][0]["components"].as_array().unwrap();
    assert_eq!(comps[0]["ell"], serde_json::json!(0));
    assert_eq!(comps[0]["m"], serde_json::json!("q1"));
    assert_eq!(
        comps[0]["terms"][0]["re"],
        serde_json::json!("1"),
        "{}",
        doc
    );
}
