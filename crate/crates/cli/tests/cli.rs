//! Binary-level contract: envelope schema, exit codes, CSV shape,
//! environment handling.

use std::process::{Command, Output};

use serde_json::Value;

fn jacring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacring"))
        .args(args)
        .env_remove("JACRING_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn envelope_has_the_stable_key_order() {
    let out = jacring(&["hodge", "--poly", "x0^4+x1^4+x2^4+x3^4", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "input", "config", "result", "warnings"]);
    assert_eq!(doc["command"], "hodge");
    assert_eq!(doc["config"]["seed"], 0);
    assert_eq!(doc["config"]["samples"], 8);
    assert_eq!(doc["result"]["hodge_numbers"], serde_json::json!([1, 19, 1]));
    assert_eq!(doc["warnings"], serde_json::json!([]));
}

#[test]
fn zero_polynomial_is_an_input_error() {
    let out = jacring(&["hilbert", "--poly", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["error"]["kind"], "ZeroPolynomial");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("zero polynomial"), "stderr: {stderr}");
}

#[test]
fn singular_input_is_a_refusal() {
    let out = jacring(&[
        "hodge",
        "--poly",
        "x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2",
        "--dim",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["error"]["kind"], "SingularInput");
}

#[test]
fn raw_mode_reports_singular_dimensions_anyway() {
    let out = jacring(&[
        "hodge",
        "--poly",
        "x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2",
        "--dim",
        "2",
        "--raw",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["slice_dims"], serde_json::json!([1, 20, 18]));
    assert!(!doc["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn parse_errors_name_the_offending_position() {
    let out = jacring(&["hilbert", "--poly", "x0^4+zebra"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["error"]["kind"], "Parse");
    let msg = doc["result"]["error"]["message"].as_str().unwrap();
    assert!(msg.contains("position"), "message: {msg}");
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = jacring(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nonartinian_hilbert_is_a_refusal_but_cap_truncates() {
    let f2 = "x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2";
    let refused = jacring(&["hilbert", "--poly", f2]);
    assert_eq!(refused.status.code(), Some(1));
    assert_eq!(
        stdout_json(&refused)["result"]["error"]["kind"],
        "NotArtinian"
    );

    let capped = jacring(&["hilbert", "--poly", f2, "--degree-cap", "11"]);
    assert_eq!(capped.status.code(), Some(0));
    let doc = stdout_json(&capped);
    assert_eq!(doc["result"]["truncated"], true);
    assert_eq!(
        doc["result"]["hilbert_function"],
        serde_json::json!([1, 4, 10, 16, 20, 20, 19, 18, 18, 18, 18, 18])
    );
    assert!(!doc["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn env_var_sets_the_prime_and_the_flag_overrides_it() {
    let from_env = Command::new(env!("CARGO_BIN_EXE_jacring"))
        .args(["hilbert", "--poly", "x0^3+x1^3+x2^3"])
        .env("JACRING_PRIME", "12289")
        .output()
        .unwrap();
    assert_eq!(stdout_json(&from_env)["config"]["prime"], 12289);

    let overridden = Command::new(env!("CARGO_BIN_EXE_jacring"))
        .args(["hilbert", "--poly", "x0^3+x1^3+x2^3", "--prime", "1009"])
        .env("JACRING_PRIME", "12289")
        .output()
        .unwrap();
    assert_eq!(stdout_json(&overridden)["config"]["prime"], 1009);
}

#[test]
fn composite_prime_is_rejected() {
    let out = jacring(&["hilbert", "--poly", "x0^3+x1^3", "--prime", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["result"]["error"]["kind"], "NotPrime");
}

#[test]
fn rational_and_multi_prime_conflict() {
    let out = jacring(&[
        "hilbert",
        "--poly",
        "x0^3+x1^3+x2^3",
        "--rational",
        "--multi-prime",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn multi_prime_reports_the_prime_list() {
    let out = jacring(&["torelli", "--poly", "x0^4+x1^4+x2^4+x3^4", "--dim", "2", "--multi-prime"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["config"]["primes"].as_array().unwrap().len(), 3);
    assert_eq!(doc["result"]["rank"], 19);
}

#[test]
fn rational_mode_reports_a_null_prime() {
    let out = jacring(&["hilbert", "--poly", "x0^4+x1^4+x2^4+x3^4", "--rational"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["config"]["prime"], Value::Null);
    assert_eq!(doc["config"]["rational_mode"], true);
    assert_eq!(
        doc["result"]["hilbert_function"],
        serde_json::json!([1, 4, 10, 16, 19, 16, 10, 4, 1])
    );
}

#[test]
fn family_scan_csv_has_the_fixed_columns() {
    let out = jacring(&[
        "family-scan",
        "--family",
        "x0^4+x1^4+x2^4+x3^4-t*x0^2*x1^2",
        "--t-values",
        "0,2",
        "--samples",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("t,smooth,dim_a0,dim_mid,dim_sigma,dim_sigma_plus1,tjurina,yukawa_rank,delta")
    );
    let smooth_row = lines.next().unwrap();
    assert!(smooth_row.starts_with("0,true,1,19,1,0,0,"), "row: {smooth_row}");
    let singular_row = lines.next().unwrap();
    // Singular fiber: tjurina 18, no yukawa rank, positive delta.
    assert!(singular_row.starts_with("2,false,"), "row: {singular_row}");
    assert!(singular_row.contains(",18,,"), "row: {singular_row}");
    assert_eq!(lines.next(), None);
}

#[test]
fn family_scan_accepts_rational_t_values() {
    let out = jacring(&[
        "family-scan",
        "--family",
        "x0^4+x1^4+x2^4+x3^4-t*x0^2*x1^2",
        "--t-values",
        "1/2",
        "--samples",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    let row = &doc["result"]["rows"][0];
    assert_eq!(row["t"], "1/2");
    assert_eq!(row["smooth"], true);
}

#[test]
fn lefschetz_fixed_witness_check() {
    let out = jacring(&[
        "lefschetz",
        "--poly",
        "x0^4+x1^4+x2^4+x3^4",
        "--witness",
        "x0+x1+x2+x3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["outcome"], "witness");
    assert_eq!(doc["result"]["mode"], "SLP");
    assert!(doc["result"]["checks"].as_array().unwrap().len() > 0);
}

#[test]
fn yukawa_single_class_paths_agree() {
    let base = [
        "yukawa",
        "--poly",
        "x0^4+x1^4+x2^4+x3^4",
        "--dim",
        "2",
        "--class",
        "x0^2*x1^2",
    ];
    let expanded = {
        let mut v = base.to_vec();
        v.extend(["--path", "expanded"]);
        stdout_json(&jacring(&v))
    };
    let composed = {
        let mut v = base.to_vec();
        v.extend(["--path", "composed"]);
        stdout_json(&jacring(&v))
    };
    assert_eq!(expanded["result"]["rank"], composed["result"]["rank"]);
    assert_eq!(expanded["result"]["path"], "expanded_power");
    assert_eq!(composed["result"]["path"], "composed_steps");
}

#[test]
fn weighted_ideal_hilbert_function() {
    let out = jacring(&[
        "hilbert",
        "--ideal",
        "x0^4;x1^2",
        "--vars",
        "2",
        "--weights",
        "1,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(
        doc["result"]["hilbert_function"],
        serde_json::json!([1, 1, 2, 2, 1, 1])
    );
    assert_eq!(doc["input"]["weights"], serde_json::json!([1, 2]));
}

#[test]
fn tjurina_smooth_fiber_is_zero() {
    let out = jacring(&["tjurina", "--poly", "x0^4+x1^4+x2^4+x3^4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["result"]["total"], 0);
}

#[test]
fn tjurina_nonisolated_locus_is_a_refusal() {
    // x0^4 + x1^4 in four variables is singular along a surface; the
    // stabilization scan must refuse.
    let out = jacring(&["tjurina", "--poly", "x0^4+x1^4", "--vars", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout_json(&out)["result"]["error"]["kind"],
        "NoStabilization"
    );
}

#[test]
fn classify_emits_the_kappa_class() {
    let doc = stdout_json(&jacring(&["classify", "--dim", "2", "--degrees", "2,3"]));
    assert_eq!(doc["result"]["kappa"], 0);
    assert_eq!(doc["result"]["class"], "CalabiYau");
    let fano = stdout_json(&jacring(&["classify", "--dim", "3", "--degrees", "2"]));
    assert_eq!(fano["result"]["class"], "FanoOrQuadric");
    assert_eq!(fano["result"]["is_quadric"], true);
}
