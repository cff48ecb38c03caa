use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_computads")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn stats_prints_per_dimension_counts() {
    let out = run(&["stats", "r_matrix"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "0:1 1:1 2:1 3:1");
}

#[test]
fn build_list_names_every_entry() {
    let out = run(&["build", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["interval", "bialgebra", "interacting_bialgebras"] {
        assert!(text.contains(name), "missing {name} in listing");
    }
}

#[test]
fn build_out_and_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("monoid.json");
    let out = run(&["build", "monoid", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(Path::new(&path).exists());

    let exported = run(&["export", "json", path.to_str().unwrap()]);
    assert!(exported.status.success());
    let direct = run(&["export", "json", "monoid"]);
    assert_eq!(stdout(&exported), stdout(&direct));
}

#[test]
fn check_tensor_borders_reports_pass() {
    let out = run(&["check", "tensor-borders", "M", "Mop"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS"), "got: {text}");
    assert!(text.contains("128 comparisons"), "got: {text}");
}

#[test]
fn check_axioms_passes_on_catalog_entries() {
    for name in ["frobenius_special", "commutative_monoid"] {
        let out = run(&["check", "axioms", name]);
        assert!(out.status.success(), "{name}: {}", stderr(&out));
    }
}

#[test]
fn iso_prints_a_witness_or_fails_with_exit_code() {
    let out = run(&["iso", "M", "M"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("mu -> mu"));

    let out = run(&["iso", "M", "Mop"]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("not isomorphic") || stderr(&out).contains("not isomorphic"));
}

#[test]
fn quotient_reads_a_relation_file() {
    let dir = tempfile::tempdir().unwrap();
    let rel = dir.path().join("rel.txt");
    std::fs::write(&rel, "# merge the two endpoints\n0 ~ 1\n").unwrap();
    let out = run(&["quotient", "interval", "--rel", rel.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    // the document on stdout should describe a circle: one point, one loop
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let gens = parsed["generators"].as_array().unwrap();
    assert_eq!(gens[0].as_array().unwrap().len(), 1);
    assert_eq!(gens[1].as_array().unwrap().len(), 1);
}

#[test]
fn tensor_and_dot_export() {
    let out = run(&["tensor", "I", "I"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["generators"][2].as_array().unwrap().len(), 1);

    let dot = run(&["export", "dot", "oriental2"]);
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.lines().filter(|l| l.contains("[dim=")).count(), 7);
}

#[test]
fn unknown_entries_fail_with_json_diagnostics() {
    let out = run(&["--json", "stats", "no_such_thing"]);
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).unwrap();
    assert!(err["error"].as_str().unwrap().contains("no_such_thing"));
}

#[test]
fn quiet_suppresses_report_output() {
    let out = run(&["check", "axioms", "M", "--quiet"]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
}
