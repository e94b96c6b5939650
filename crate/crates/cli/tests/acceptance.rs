//! CLI conformance: the documented examples reproduce bit-identical JSON
//! across two consecutive runs, and the full verification command exits
//! cleanly.

use std::process::{Command, Output};

fn pcmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_twice_identically(args: &[&str]) -> Output {
    let first = pcmat(args);
    let second = pcmat(args);
    assert_eq!(
        first.stdout, second.stdout,
        "stdout differed between runs of {args:?}"
    );
    assert_eq!(
        first.status.code(),
        second.status.code(),
        "exit status differed between runs of {args:?}"
    );
    first
}

#[test]
fn criterion_8_cli_conformance() {
    let rank = run_twice_identically(&[
        "rank",
        "--json",
        r#"{"universe": 4, "blocks": [[0, 1], [2, 3]]}"#,
        "--set",
        "0,1,2",
    ]);
    assert_eq!(rank.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&rank.stdout).unwrap();
    assert_eq!(value["result"], serde_json::json!(2));
    assert_eq!(value["schema"], serde_json::json!(1));

    let axioms = run_twice_identically(&[
        "check-axioms",
        "--kind",
        "circuits",
        "--json",
        r#"{"universe": 5, "blocks": [[0, 2], [1], [3, 4]]}"#,
    ]);
    assert_eq!(axioms.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&axioms.stdout).unwrap();
    assert_eq!(value["result"], serde_json::json!(true));

    let verify = run_twice_identically(&["verify", "--max-n", "5"]);
    assert_eq!(
        verify.status.code(),
        Some(0),
        "verify --max-n 5 must exit 0"
    );
    let value: serde_json::Value = serde_json::from_slice(&verify.stdout).unwrap();
    assert_eq!(value["result"]["failures"], serde_json::json!(0));

    println!("PASS criterion 8: cli-conformance — bit-identical output, verify exits 0");
}
