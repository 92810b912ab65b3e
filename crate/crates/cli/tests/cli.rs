//! End-to-end checks of the binary: byte determinism, thread-count
//! independence, the exit-status contract, and file artifacts.

use serde_json::Value;
use std::process::Command;

fn sapgrid(args: &[&str], envs: &[(&str, &str)]) -> (String, String, Option<i32>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sapgrid"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn sapgrid");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code(),
    )
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["bounds", "elliptic"],
        vec!["grid-count", "--curve", "x^2+y^2-25", "--grid", "-5,1,-5,1,11"],
        vec!["sap", "search", "--coeffs", "0,0,0,0,1", "--x-height", "2", "--lengths", "2"],
    ] {
        let first = sapgrid(&args, &[]);
        let second = sapgrid(&args, &[]);
        assert_eq!(first.2, Some(0), "stderr: {}", first.1);
        assert_eq!(first.0, second.0, "{args:?} not deterministic");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let args = [
        "scaling",
        "--curve",
        "y - x^2",
        "--ks",
        "16,64,256",
        "--exponent",
        "2/3",
    ];
    let one = sapgrid(&args, &[("SAPGRID_THREADS", "1")]);
    let four = sapgrid(&args, &[("SAPGRID_THREADS", "4")]);
    assert_eq!(one.2, Some(0), "stderr: {}", one.1);
    assert_eq!(four.2, Some(0), "stderr: {}", four.1);
    assert_eq!(one.0, four.0, "output depends on SAPGRID_THREADS");
}

#[test]
fn exit_status_contract() {
    // 0: success.
    let (_, _, code) = sapgrid(&["budgets", "--degree", "3"], &[]);
    assert_eq!(code, Some(0));
    // 1: domain errors, named on standard error.
    let (_, stderr, code) = sapgrid(
        &["intersect", "--curve", "y^2 - x^3", "--translate", "0,0"],
        &[],
    );
    assert_eq!(code, Some(1));
    assert!(stderr.starts_with("ZeroTranslation"), "stderr: {stderr}");
    let (_, stderr, code) = sapgrid(&["budgets", "--degree", "1"], &[]);
    assert_eq!(code, Some(1));
    assert!(stderr.starts_with("DegreeTooSmall"), "stderr: {stderr}");
    let (_, stderr, code) = sapgrid(
        &["grid-count", "--curve", "x^y", "--grid", "0,1,0,1,3"],
        &[],
    );
    assert_eq!(code, Some(1));
    assert!(stderr.starts_with("ExponentNotInteger"), "stderr: {stderr}");
    let (_, stderr, code) = sapgrid(
        &["scaling", "--curve", "x*y", "--ks", "4", "--exponent", "2/3"],
        &[],
    );
    assert_eq!(code, Some(1));
    assert!(stderr.starts_with("LinearFactorDetected"), "stderr: {stderr}");
    // 2: usage errors.
    let (_, _, code) = sapgrid(&["grid-count", "--curve", "x", "--grid", "zz"], &[]);
    assert_eq!(code, Some(2));
    let (_, _, code) = sapgrid(&["frobnicate"], &[]);
    assert_eq!(code, Some(2));
    let (_, _, code) = sapgrid(
        &["graph", "--coeffs", "0,0,0,0,1", "--grid", "0,2,-1,4,2", "--sigma", "0,0"],
        &[],
    );
    assert_eq!(code, Some(2), "non-permutation sigma is a usage error");
}

#[test]
fn fitted_curve_string_feeds_back_into_grid_count() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("circle.csv");
    std::fs::write(&csv, "1,0\n0,1\n-1,0\n0,-1\n3/5,4/5 # on the circle\n").unwrap();
    let (stdout, stderr, code) = sapgrid(
        &["fit", "--degree", "2", "--points", csv.to_str().unwrap()],
        &[],
    );
    assert_eq!(code, Some(0), "stderr: {stderr}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["basis_size"], Value::String("1".into()));
    let curve = v["basis"][0].as_str().unwrap();
    let (stdout, stderr, code) = sapgrid(
        &["grid-count", "--curve", curve, "--grid", "-1,1,-1,1,3"],
        &[],
    );
    assert_eq!(code, Some(0), "stderr: {stderr}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["count"], Value::String("4".into()), "axis points of the circle");
}

#[test]
fn graph_emits_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("k2.dot");
    let (stdout, stderr, code) = sapgrid(
        &[
            "graph",
            "--coeffs",
            "0,0,0,0,1",
            "--grid",
            "0,2,-1,4,2",
            "--emit-dot",
            dot_path.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code, Some(0), "stderr: {stderr}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["n"], Value::String("17".into()));
    assert_eq!(v["e"], Value::String("12".into()));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("graph translates {"));
    assert_eq!(dot.matches(" -- ").count(), 12);
}

#[test]
fn missing_point_file_is_an_io_error() {
    let (_, stderr, code) = sapgrid(
        &["fit", "--degree", "2", "--points", "/nonexistent/p.csv"],
        &[],
    );
    assert_eq!(code, Some(1));
    assert!(stderr.starts_with("IoError"), "stderr: {stderr}");
}

#[test]
fn weierstrass_intersect_reports_branches() {
    // Vertical-tangency translate with 2v + a*u = 0 takes the quadratic
    // branch; a generic translate takes the quartic one.
    let (stdout, _, code) = sapgrid(
        &["weierstrass-intersect", "--coeffs", "0,0,0,-1,0", "--translate", "1,0"],
        &[],
    );
    assert_eq!(code, Some(0));
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["branch"], Value::String("quadratic".into()));
    assert_eq!(v["real_count"], Value::String("2".into()));
    let (stdout, _, code) = sapgrid(
        &["weierstrass-intersect", "--coeffs", "0,0,0,-1,0", "--translate", "0,1/2"],
        &[],
    );
    assert_eq!(code, Some(0));
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["branch"], Value::String("quartic".into()));
    let degree: u32 = v["branch_degree"].as_str().unwrap().parse().unwrap();
    assert!(degree <= 4);
}

#[test]
fn decompose_reports_quadrants() {
    let (stdout, stderr, code) = sapgrid(
        &["decompose", "--curve", "x^2 + y^2 - 1", "--box", "-2,2,-2,2"],
        &[],
    );
    assert_eq!(code, Some(0), "stderr: {stderr}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["arc_count"], Value::String("4".into()));
    assert_eq!(v["gap_count"], Value::String("0".into()));
    let arcs = v["arcs"].as_array().unwrap();
    assert!(arcs.iter().all(|a| a["shape"] == Value::String("graph".into())));
}
