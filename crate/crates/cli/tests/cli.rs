use std::path::PathBuf;
use std::process::{Command, Output};

fn problem(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../problems")
        .join(name)
}

fn qsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsig"))
        .args(args)
        .output()
        .expect("qsig runs")
}

fn run_on(cmd: &str, file: &str, extra: &[&str]) -> (i32, String, String) {
    let path = problem(file);
    let mut args = vec![cmd, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = qsig(&args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn signature_of_the_saddle() {
    let (code, out, _) = run_on("signature", "hyperbolic.qsig", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("\nsignature = -1\n"));
    assert!(out.contains("radial_index_on_quotient = -1"));
    assert!(out.contains("block trivial | dim 1 | inertia (0, 0, 1) | signature -1"));
}

#[test]
fn signature_with_oracle_attached() {
    let (code, out, _) = run_on("signature", "hyperbolic.qsig", &["--with-oracle", "--seed", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict = AGREE (-1 = -1)"), "{out}");
}

#[test]
fn quantum_totals() {
    let (code, out, _) = run_on("quantum", "quadric_plane.qsig", &[]);
    assert_eq!(code, 0);
    for key in ["total_dim = 2", "orbifold_dim = 2", "real_signature = 2"] {
        assert!(out.contains(key), "{out}");
    }
    let (code, out, _) = run_on("quantum", "cubic_z3.qsig", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("total_dim = 2"), "{out}");
}

#[test]
fn oracle_check_agrees_and_is_deterministic() {
    let a = run_on("oracle-check", "quartic_line.qsig", &["--seed", "5", "--t", "1/30"]);
    let b = run_on("oracle-check", "quartic_line.qsig", &["--seed", "5", "--t", "1/30"]);
    assert_eq!(a.0, 0);
    assert!(a.1.contains("verdict = AGREE (1 = 1)"), "{}", a.1);
    assert!(a.1.contains("t = 1/30"));
    assert_eq!(a, b);
}

#[test]
fn burnside_reductions() {
    let (code, out, _) = run_on("burnside", "sign_burnside.qsig", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("u = 1 - 2*[G/H0]\n  r0 = -1\n  r1 = 0\n"), "{out}");
    assert!(out.contains("character = (0):-3 (1):1"));
    assert!(out.contains("u2 = 1 + 4*[G/H0]"));
}

#[test]
fn exit_codes() {
    assert_eq!(run_on("signature", "non_isolated.qsig", &[]).0, 3);
    let (code, _, err) = run_on("signature", "not_invariant.qsig", &[]);
    assert_eq!(code, 2);
    assert!(err.contains("not invariant under generator 0"));
    assert_eq!(run_on("signature", "does_not_exist.qsig", &[]).0, 2);
    assert_eq!(qsig(&["signature"]).status.code(), Some(2));
    assert_eq!(run_on("quantum", "hyperbolic.qsig", &["--t", "abc"]).0, 2);
    // a residual tolerance no root can meet forces a verification failure
    assert_eq!(
        run_on("oracle-check", "quartic_line.qsig", &["--tol-root", "1e-300"]).0,
        4
    );
}
