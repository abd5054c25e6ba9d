//! CLI integration tests: golden outputs for the documented invocations,
//! deterministic repetition, exit codes, and JSON round trips.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chainring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_chainring"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn ring_show_z4() {
    let out = run(&["ring", "show", "--fixture", "z4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ring: Z4"));
    assert!(text.contains("units: 2"));
    assert!(text.contains("teichmuller: {0, 1}"));
}

#[test]
fn ring_show_by_parameters() {
    let out = run(&[
        "ring", "show", "--family", "unramified", "--p", "2", "--n", "1", "--s", "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ring: Z4"));
}

#[test]
fn code_rsf_golden() {
    let out = run(&["code", "rsf", "--ring", "z4", "--matrix", "2 2;1 1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1\ntype: (2;1,0)\n");
}

#[test]
fn cyclic_cosets_golden() {
    let out = run(&["cyclic", "cosets", "--ell", "7", "--q", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{0} {1,2,4} {3,5,6}\n");
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["ext", "build", "--fixture", "gr43"],
        vec!["cyclic", "context", "--ring", "z4", "--ell", "7"],
        vec!["code", "bounds", "--fixture", "gr42", "--matrix", "1,0 0,1 1,1"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(stdout(&a), stdout(&b), "two runs must agree byte for byte");
    }
}

#[test]
fn domain_error_exit_code() {
    // 6 and 2 are not coprime
    let out = run(&["cyclic", "cosets", "--ell", "6", "--q", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("NotCoprime"));
    // JSON mode puts the machine-readable object on stdout
    let out = run(&["--json", "cyclic", "cosets", "--ell", "6", "--q", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let obj: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(obj["error"], "NotCoprime");
}

#[test]
fn usage_error_exit_code() {
    let out = run(&["code", "rsf", "--ring", "z4"]); // missing --matrix
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "unknown"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_bijection_confirms_27_codes() {
    let out = run(&["verify", "bijection", "--ell", "7", "--ring", "z4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("27 distinct codes confirmed"), "{text}");
}

#[test]
fn verify_small_suite_runs() {
    let out = run(&[
        "verify", "dual", "--fixture", "z4", "--cases", "20", "--seed", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pass"), "{text}");
}

#[test]
fn json_code_roundtrip_through_cli() {
    // emit a code as JSON, feed it back on stdin to another subcommand
    let out = run(&[
        "--json", "code", "rsf", "--fixture", "gr42", "--matrix", "1,0 1,1;0,0 2,0",
    ]);
    assert!(out.status.success());
    let code_json = stdout(&out);
    let dual = run_stdin(
        &["code", "dual", "--fixture", "gr42", "--matrix", "-"],
        &code_json,
    );
    assert!(dual.status.success(), "{}", String::from_utf8_lossy(&dual.stderr));
    // the dual of the dual returns the original RSF
    let dual_json = run_stdin(
        &["--json", "code", "dual", "--fixture", "gr42", "--matrix", "-"],
        &code_json,
    );
    let dd = run_stdin(
        &["--json", "code", "dual", "--fixture", "gr42", "--matrix", "-"],
        &stdout(&dual_json),
    );
    let original: serde_json::Value = serde_json::from_str(&code_json).unwrap();
    let roundtrip: serde_json::Value = serde_json::from_str(&stdout(&dd)).unwrap();
    assert_eq!(original, roundtrip);
}

#[test]
fn ring_json_feeds_back_as_ring_argument() {
    let out = run(&["--json", "ring", "show", "--fixture", "z4"]);
    assert!(out.status.success());
    let obj: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ring_json = serde_json::to_string(&obj["ring"]).unwrap();
    let rsf = run(&["code", "rsf", "--ring", &ring_json, "--matrix", "2 2;1 1"]);
    assert!(rsf.status.success(), "{}", String::from_utf8_lossy(&rsf.stderr));
    assert_eq!(stdout(&rsf), "1 1\ntype: (2;1,0)\n");
}

#[test]
fn ext_trace_golden() {
    let out = run(&["ext", "trace", "--fixture", "gr43", "--elem", "1,0,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn cyclic_eval_and_genpoly() {
    let out = run(&[
        "cyclic", "eval", "--ring", "z4", "--ell", "7", "--set", "0", "--t", "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type: (7;1,0)"), "{text}");
    let out = run(&["cyclic", "genpoly", "--ring", "z4", "--ell", "7", "--set", "0"]);
    assert!(out.status.success());
    // (x^7 - 1)/(x - 1) = 1 + x + ... + x^6
    let text = stdout(&out);
    assert!(text.contains("x^6"), "{text}");
}

#[test]
fn cyclic_minweight_golden() {
    let out = run(&[
        "cyclic", "minweight", "--ring", "z4", "--matrix", "1 1 1 1 1 1 1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn code_invariant_flag() {
    let out = run(&[
        "code", "invariant", "--fixture", "gr42", "--matrix", "1,0 1,0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true\n");
    let out = run(&[
        "code", "invariant", "--fixture", "gr42", "--matrix", "1,0 0,1",
    ]);
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn hermitian_error_surfaces() {
    let out = run(&[
        "code", "dual", "--fixture", "gr43", "--matrix", "1,0,0 0,1,0", "--form", "hermitian",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("HermitianRequiresEvenDegree"));
}
