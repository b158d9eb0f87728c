//! End-to-end checks of the documented command lines: exit codes, witness
//! reproducibility, and the byte-identical determinism contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rkbound"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("rkbound-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn refutation_fixture_exits_2_with_reproducible_witness() {
    let out = run(&[
        "certify-factor",
        "--k",
        "szego_pow:0.5",
        "--t",
        "szego_pow:0.5",
        "--map",
        "square",
    ]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["verdict"], "Refuted");
    let witness = &body["witness"];
    let min_eig = witness["min_eig"].as_f64().unwrap();
    let tol = witness["tol"].as_f64().unwrap();
    assert!(min_eig < -1e-6);

    // Re-check the witness standalone: rebuild the Gram on the stored points
    // and recompute the Rayleigh quotient.
    let k = rkbound::zoo::kernel_by_label("szego_pow:0.5").unwrap();
    let quotient = k
        .quotient(&k.compose(&rkbound::zoo::square_map()).unwrap())
        .unwrap();
    let witness: rkbound::julia::RefutationWitness = serde_json::from_value(witness.clone()).unwrap();
    assert!(witness.reproduces(&quotient).unwrap());
    assert!(witness.min_eig < -tol);
}

#[test]
fn jc_report_halfway_exits_0_with_half_constant() {
    let out = run(&["jc-report", "--k", "szego", "--t", "szego", "--map", "halfway", "--xi", "1+0i"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let c_hat = body["c_hat"].as_f64().unwrap();
    assert!((c_hat - 0.5).abs() < 1e-4, "c_hat = {c_hat}");
    assert_eq!(body["sandwich_ok"], true);
}

#[test]
fn iterate_halfway_converges() {
    let out = run(&["iterate", "--k", "szego", "--map", "halfway", "--x0", "0", "--xi", "1+0i", "-N", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["converged"], true);
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["estimate-c", "--k", "not-a-kernel", "--t", "szego", "--map", "identity", "--xi", "1+0i"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn documented_examples_are_byte_deterministic() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["certify-factor", "--k", "szego_pow:0.5", "--t", "szego_pow:0.5", "--map", "square", "--seed", "3"],
        vec!["jc-report", "--k", "szego", "--t", "szego", "--map", "halfway", "--xi", "1+0i", "--seed", "5"],
        vec!["boundary-scan", "--k", "szego", "--xi", "1+0i", "--kind", "radial", "-N", "25", "--p-metric", "--pmetric-squared", "--format", "csv"],
        vec!["estimate-c", "--k", "szego", "--t", "szego", "--map", "halfway", "--xi", "1+0i", "--format", "csv"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let p1 = tmp_path(&format!("det-{i}-a"));
        let p2 = tmp_path(&format!("det-{i}-b"));
        let mut args1 = case.clone();
        let out_flag1 = p1.to_str().unwrap();
        args1.extend(["--out", out_flag1]);
        let mut args2 = case.clone();
        let out_flag2 = p2.to_str().unwrap();
        args2.extend(["--out", out_flag2]);
        let s1 = run(&args1);
        let s2 = run(&args2);
        assert_eq!(s1.status.code(), s2.status.code());
        let b1 = std::fs::read(&p1).unwrap();
        let b2 = std::fs::read(&p2).unwrap();
        assert_eq!(b1, b2, "case {i} not byte-identical");
        let _ = std::fs::remove_file(p1);
        let _ = std::fs::remove_file(p2);
    }
}

#[test]
fn plot_data_is_emitted_next_to_the_report() {
    let p = tmp_path("plot");
    let out = run(&[
        "iterate",
        "--k",
        "szego",
        "--map",
        "halfway",
        "--x0",
        "0",
        "--xi",
        "1+0i",
        "-N",
        "30",
        "--out",
        p.to_str().unwrap(),
        "--emit-plot-data",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let plot = p.with_extension("plot.csv");
    let csv = std::fs::read_to_string(&plot).unwrap();
    assert!(csv.starts_with("series,n,value\n"));
    assert!(csv.contains("e_level"));
    let _ = std::fs::remove_file(p);
    let _ = std::fs::remove_file(plot);
}

#[test]
fn combined_sequence_and_region_spec_strings() {
    // kind@anchor carries the anchor inline; region strings override the
    // membership parameters.
    let out = run(&[
        "boundary-scan",
        "--k",
        "szego",
        "--kind",
        "radial@1+0i",
        "--region",
        "gamma:M=2@1+0i",
        "--region",
        "e:M=0.5",
        "-N",
        "10",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let csv = String::from_utf8_lossy(&out.stdout);
    assert!(csv.starts_with("n,re,im,diag,gamma_member,e_member"));

    // A region anchor that disagrees with the sequence anchor is a usage error.
    let out = run(&[
        "boundary-scan",
        "--k",
        "szego",
        "--kind",
        "radial@1+0i",
        "--region",
        "gamma:M=2@-1+0i",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // Without any anchor the scan cannot run.
    let out = run(&["boundary-scan", "--k", "szego", "--kind", "radial"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn julia_check_halfway_contracts() {
    let out = run(&[
        "julia-check",
        "--k",
        "szego",
        "--map",
        "halfway",
        "--xi",
        "1+0i",
        "--Ms",
        "1,2",
        "--points",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["violations"], 0);
    assert!(body["checked"].as_u64().unwrap() >= 200);
}

#[test]
fn weighted_derivative_violation_free_fixture() {
    let out = run(&[
        "weighted-derivative",
        "--phi",
        "halfway",
        "--zeta",
        "1+0i",
        "--lambda",
        "1+0i",
        "--alpha",
        "1.0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["verdict"], "BothConverge");
}
