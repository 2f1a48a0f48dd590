use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evenperm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn genfun_for_123() {
    let out = run(&["genfun", "--tau", "1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["F"]["num"], serde_json::json!(["1", "-1"]));
    assert_eq!(v["F"]["den"], serde_json::json!(["1", "-2"]));
    assert!(v["E"].is_object() && v["O"].is_object());
    assert_eq!(v["series"]["E"].as_array().unwrap().len(), 21);
}

#[test]
fn genfun_single_parity() {
    let v = json(&run(&[
        "genfun", "--tau", "12", "--parity", "odd", "--order", "4",
    ]));
    assert!(v.get("E").is_none());
    assert_eq!(
        v["series"]["O"],
        serde_json::json!(["0", "0", "1", "1", "0"])
    );
}

#[test]
fn oracle_even_count() {
    let out = run(&["oracle", "--n", "3", "--avoid", "1,3,2", "--parity", "even"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["even"], 3);
}

#[test]
fn oracle_distribution_csv() {
    let out = run(&["oracle", "--n", "4", "--stat", "rlm", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("value,even,odd,total\n"));
    let total: u64 = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 14);
}

#[test]
fn oracle_containment_flag() {
    let v = json(&run(&["oracle", "--n", "3", "--contain", "123:1"]));
    assert_eq!(v["total"], 1);
}

#[test]
fn verify_increasing_all_pass() {
    let out = run(&[
        "verify",
        "--family",
        "increasing",
        "--max-k",
        "4",
        "--max-n",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["verdict"] == "pass"));
    for key in [
        "family",
        "params",
        "source",
        "expected",
        "observed",
        "verdict",
        "runtime_ms",
    ] {
        assert!(checks[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn seed_report_is_written() {
    let path = std::env::temp_dir().join(format!("evenperm-report-{}.json", std::process::id()));
    let out = run(&[
        "verify",
        "--family",
        "examples",
        "--seed-report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved["checks"].as_array().unwrap().len(), 5);
    let _ = std::fs::remove_file(path);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["genfun", "--tau", "1,3,2"]).status.code(), Some(1));
    assert_eq!(run(&["genfun", "--tau", "1,x"]).status.code(), Some(1));
    assert_eq!(run(&["oracle", "--n", "15"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--family", "nope"]).status.code(), Some(1));
    assert_eq!(
        run(&["series", "--tau", "12", "--order", "31"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn unsafe_bounds_lifts_order_limit() {
    let out = run(&["--unsafe-bounds", "series", "--tau", "12", "--order", "31"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["even"].as_array().unwrap().len(), 32);
}

#[test]
fn decompose_json() {
    let v = json(&run(&["decompose", "--tau", "3412"]));
    assert_eq!(v["r"], 1);
    assert_eq!(v["prefixes"], serde_json::json!(["1", "3412"]));
    assert_eq!(v["suffixes"], serde_json::json!(["3412", "12", "()"]));
}

#[test]
fn chebyshev_commands() {
    let v = json(&run(&["chebyshev", "--n", "3"]));
    assert_eq!(v["W_hat"], serde_json::json!(["1", "-2"]));
    let out = run(&["chebyshev", "verify", "--max-k", "20", "--max-pq", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out).as_object().unwrap().values().all(|b| b == true));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["genfun", "--tau", "213", "--order", "8"]).stdout;
    let b = run(&["genfun", "--tau", "213", "--order", "8"]).stdout;
    assert_eq!(a, b);
}
