//! End-to-end checks of the command-line binary: flag parsing, output
//! formats, exit codes, and byte-for-byte determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_veronucleus"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pascal_json_row_50_zero_count() {
    let out = run(&["pascal", "--rows", "51", "--p", "2", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["row_stats"][50]["zeros"], 43);
}

#[test]
fn pascal_ascii_single_row() {
    let out = run(&["pascal", "--rows", "1", "--p", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn pascal_rejects_non_prime() {
    let out = run(&["pascal", "--rows", "4", "--p", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nuclei_table_n50() {
    let out = run(&["nuclei", "--n", "50", "--p", "2", "--e", "7", "--format", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-1,...,30"), "{text}");
    assert!(text.contains("31,...,46"));
    assert!(text.contains("47,48"));
    assert!(text.contains("42"));
}

#[test]
fn nuclei_json_conic() {
    let out = run(&["nuclei", "--n", "2", "--p", "2", "--e", "2", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = report["entries"].as_array().unwrap();
    let k1 = entries.iter().find(|e| e["k"] == 1).unwrap();
    assert_eq!(k1["dim_formula"], 0);
    assert_eq!(k1["dim_bruteforce"], 0);
    assert_eq!(k1["basis_indices"], serde_json::json!([1]));
}

#[test]
fn nuclei_all_empty_case() {
    let out = run(&["nuclei", "--n", "3", "--p", "2", "--e", "3", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for entry in report["entries"].as_array().unwrap() {
        assert_eq!(entry["dim_formula"], -1);
        assert_eq!(entry["dim_bruteforce"], -1);
    }
}

#[test]
fn lattice_dot_n31() {
    let out = run(&["lattice", "--n", "31", "--p", "3", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert_eq!(dot.matches("label=").count(), 10);
    assert_eq!(dot.matches("style=filled").count(), 7);
    assert_eq!(dot.matches("peripheries=2").count(), 3);
    assert_eq!(dot.matches(" -> ").count(), 12);
}

#[test]
fn lattice_json_chain_flag() {
    let out = run(&["lattice", "--n", "8", "--p", "3", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["is_chain"], true);
    assert_eq!(report["chain_criterion"], true);

    let out = run(&["lattice", "--n", "2", "--p", "2", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(report["is_chain"], true);
}

#[test]
fn veronese_golden_cases() {
    let out = run(&["veronese", "--m", "2", "--t", "3", "--p", "2", "--e", "1"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["nucleus"]["dim_bruteforce"], 3);
    assert_eq!(report["nucleus"]["in_hypothesis"], false);

    let out = run(&["veronese", "--m", "2", "--t", "3", "--p", "2", "--e", "2"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["nucleus"]["dim_bruteforce"], 0);

    let out = run(&["veronese", "--m", "2", "--t", "2", "--p", "2", "--e", "2"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["nucleus"]["dim_bruteforce"], 2);
}

#[test]
fn verify_scoped_run_exits_zero() {
    let out = run(&["verify", "--only", "veronese", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["failed"], 0);
    assert!(report["passed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_subset_scope_flags() {
    let out = run(&["verify", "--only", "nrc", "--n-max", "5", "--format", "table"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("passed, 0 failed"));
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "--only", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn field_cap_env_is_honored() {
    let out = bin()
        .args(["nuclei", "--n", "2", "--p", "2", "--e", "5"])
        .env("VERONUCLEUS_FIELD_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));
}

#[test]
fn invalid_format_for_command() {
    let out = run(&["pascal", "--rows", "4", "--p", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_written() {
    let dir = std::env::temp_dir().join("veronucleus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lattice.json");
    let out = run(&[
        "lattice", "--n", "4", "--p", "2", "--format", "json", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["n"], 4);
    std::fs::remove_file(&path).ok();
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["lattice", "--n", "12", "--p", "2", "--format", "json"],
        vec!["lattice", "--n", "31", "--p", "3", "--format", "dot"],
        vec!["nuclei", "--n", "6", "--p", "2", "--e", "4", "--format", "json"],
        vec!["veronese", "--m", "2", "--t", "2", "--p", "3", "--e", "1", "--format", "json"],
        vec!["pascal", "--rows", "32", "--p", "5", "--format", "json"],
    ] {
        let first = stdout(&run(&args));
        let second = stdout(&run(&args));
        assert_eq!(first, second, "{args:?}");
    }
}
