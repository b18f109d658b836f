//! End-to-end tests of the command-line interface: subcommand output,
//! exit codes (0 pass, 1 fail, 2 input error, 3 inconclusive) and input
//! diagnostics.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn lattice_file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3lattice"))
        .args(args)
        .output()
        .unwrap()
}

const QUARTIC_OCTIC: &str = r#"{ "rank": 2, "gram": [[4, 9], [9, 8]], "labels": ["f4", "f8"] }"#;
const HYPERBOLIC: &str = r#"{ "rank": 2, "gram": [[2, 0], [0, -2]] }"#;

#[test]
fn lattice_info_reports_invariants() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&["lattice-info", "--lattice", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1, 1, 0)"));
    assert!(text.contains("-49"));
}

#[test]
fn lattice_info_json_fields() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&["lattice-info", "--lattice", f.path().to_str().unwrap(), "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rank"], 2);
    assert_eq!(doc["discriminant"], "-49");
    assert_eq!(doc["signature"]["n_plus"], 1);
}

#[test]
fn represent_found_exits_zero() {
    let f = lattice_file(r#"{ "rank": 1, "gram": [[2]] }"#);
    let out = run(&[
        "represent",
        "--lattice",
        f.path().to_str().unwrap(),
        "--target",
        "2",
        "--bound",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("(1)"));
}

#[test]
fn represent_not_found_exits_three() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&[
        "represent",
        "--lattice",
        f.path().to_str().unwrap(),
        "--target",
        "-2",
        "--bound",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stdout).unwrap().contains("NotFoundWithinBound"));
}

#[test]
fn isotropic_balanced_order_prefers_positive_witness() {
    let f = lattice_file(HYPERBOLIC);
    let out = run(&["isotropic", "--lattice", f.path().to_str().unwrap(), "--bound", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("(1, 1)"));
}

#[test]
fn beauville_extend_appends_e_line() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&["beauville-extend", "--lattice", f.path().to_str().unwrap(), "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["gram"][2][2], -4);
    assert_eq!(doc["labels"][2], "e");
}

#[test]
fn involution_of_exceptional_class() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&[
        "involution",
        "--lattice",
        f.path().to_str().unwrap(),
        "--f4",
        "f4",
        "--x",
        "e",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("2*f4 - 3*e"));
}

#[test]
fn involution_rejects_bad_reflector() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&[
        "involution",
        "--lattice",
        f.path().to_str().unwrap(),
        "--f4",
        "f8",
        "--x",
        "e",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn intersect_and_sigma_closed_forms() {
    let f = lattice_file(QUARTIC_OCTIC);
    let path = f.path().to_str().unwrap();
    let out = run(&[
        "intersect", "--lattice", path, "--f", "f8", "--m", "2", "--g", "5*f4 - f8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2666");

    let out = run(&["sigma", "--lattice", path, "--f", "f8", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "4");
}

#[test]
fn reflect_negates_the_class_itself() {
    let f = lattice_file(r#"{ "rank": 2, "gram": [[2, 0], [0, -2]], "labels": ["a", "b"] }"#);
    let out = run(&[
        "reflect",
        "--lattice",
        f.path().to_str().unwrap(),
        "--x",
        "b",
        "--c",
        "b",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("-b"));
}

#[test]
fn density_check_passes_on_valid_instance() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&[
        "density-check",
        "--lattice",
        f.path().to_str().unwrap(),
        "--f",
        "f8",
        "--g",
        "5*f4 - f8",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["suite"], "density-check");
    assert!(doc["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
}

#[test]
fn density_check_fails_on_proportional_g() {
    let f = lattice_file(r#"{ "rank": 1, "gram": [[8]], "labels": ["h"] }"#);
    let out = run(&[
        "density-check",
        "--lattice",
        f.path().to_str().unwrap(),
        "--f",
        "2*h",
        "--g",
        "h",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("[FAIL]"));
}

#[test]
fn density_check_rejects_odd_degree_polarization() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&[
        "density-check",
        "--lattice",
        f.path().to_str().unwrap(),
        "--f",
        "f4",
        "--g",
        "f8",
    ]);
    // <f4,f4> = 4 is not of the form 2m^2
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_name_the_offending_field() {
    let asym = lattice_file(r#"{ "rank": 2, "gram": [[4, 9], [7, 8]] }"#);
    let out = run(&["lattice-info", "--lattice", asym.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("gram"));

    let ragged = lattice_file(r#"{ "rank": 2, "gram": [[4, 9], [9]] }"#);
    let out = run(&["lattice-info", "--lattice", ragged.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["lattice-info", "--lattice", "/nonexistent/lattice.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_vector_expression_exits_two() {
    let f = lattice_file(QUARTIC_OCTIC);
    let out = run(&[
        "reflect",
        "--lattice",
        f.path().to_str().unwrap(),
        "--x",
        "2*nope",
        "--c",
        "f4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("nope"));
}

#[test]
fn verify_paper_seed_changes_json_but_not_verdict() {
    let a = run(&["verify-paper", "--bound", "10", "--seed", "1", "--json"]);
    let b = run(&["verify-paper", "--bound", "10", "--seed", "2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let da: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let db: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(da["seed"], 1);
    assert_eq!(db["seed"], 2);
    assert_eq!(
        da["claims"].as_array().unwrap().len(),
        db["claims"].as_array().unwrap().len()
    );
}
