use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympair"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Vec<Value>) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let code = out.status.code().unwrap();
    let rows = if out.stdout.is_empty() {
        Vec::new()
    } else {
        serde_json::from_slice::<Value>(&out.stdout)
            .unwrap()
            .as_array()
            .unwrap()
            .clone()
    };
    (code, rows)
}

fn column(rows: &[Value], key: &str) -> Vec<Value> {
    rows.iter().map(|r| r[key].clone()).collect()
}

fn ints(values: &[u64]) -> Vec<Value> {
    values.iter().map(|&v| Value::from(v)).collect()
}

#[test]
fn table_rows() {
    let (code, rows) = json(&["table", "--p", "3", "--e", "2", "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!(rows.len(), 10);
    assert_eq!(column(&rows, "d_p"), ints(&[2, 3, 4, 4, 6, 6, 6, 9, 9, 0]));

    let (_, rows) = json(&["table", "--p", "2", "--e", "1"]);
    assert_eq!(column(&rows, "d_p"), ints(&[2, 2, 0]));
    let (_, rows) = json(&["table", "--p", "5", "--e", "1"]);
    assert_eq!(column(&rows, "d_p"), ints(&[2, 3, 4, 5, 5, 0]));
    assert_eq!(rows[5]["mds_pair"], Value::Null);
}

#[test]
fn invalid_parameters_are_usage_errors() {
    assert_eq!(
        run(&["table", "--p", "4", "--e", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["table", "--p", "3", "--e", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["table", "--p", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["simulate", "--p", "3", "--e", "2", "--i", "4", "--t", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        run(&["verify", "--p", "3", "--e", "2", "--m", "1"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["verify", "--p", "2", "--e", "2", "--m", "2"])
            .status
            .code(),
        Some(0)
    );
    let out = run(&[
        "verify",
        "--p",
        "7",
        "--e",
        "3",
        "--m",
        "2",
        "--max-enum",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("skipped"));
}

#[test]
fn weight_command() {
    let (code, rows) = json(&[
        "weight",
        "--p",
        "3",
        "--m",
        "1",
        "--vector",
        "2,1,0,0,0,0,0,0,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(rows[0]["hamming_weight"], 2);
    assert_eq!(rows[0]["pair_weight"], 3);

    let (_, rows) = json(&["weight", "--p", "3", "--vector", "0,0,0,0"]);
    assert_eq!(
        (
            rows[0]["hamming_weight"].clone(),
            rows[0]["pair_weight"].clone()
        ),
        (0.into(), 0.into())
    );

    let (_, rows) = json(&["weight", "--p", "2", "--vector", "1,0,1,0,0"]);
    assert_eq!(rows[0]["pair_weight"], 4);

    assert_eq!(
        run(&["weight", "--p", "2", "--vector", "1,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["weight", "--p", "2", "--vector", "1,x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["weight", "--p", "2", "--vector", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn pairdist_command() {
    let zero = "0,0,0,0,0";
    let (code, rows) = json(&["pairdist", "--p", "2", "--x", "1,0,1,0,0", "--y", zero]);
    assert_eq!(code, 0);
    assert_eq!(
        (
            rows[0]["d_h"].as_u64(),
            rows[0]["l"].as_u64(),
            rows[0]["d_p"].as_u64()
        ),
        (Some(2), Some(2), Some(4))
    );

    let (_, rows) = json(&["pairdist", "--p", "2", "--x", "1,0,0,0,1", "--y", zero]);
    assert_eq!(
        (
            rows[0]["d_h"].as_u64(),
            rows[0]["l"].as_u64(),
            rows[0]["d_p"].as_u64()
        ),
        (Some(2), Some(1), Some(3))
    );

    let (_, rows) = json(&[
        "pairdist",
        "--p",
        "2",
        "--x",
        "1,1,0,1,0",
        "--y",
        "1,1,0,1,0",
    ]);
    assert_eq!(
        (rows[0]["d_h"].as_u64(), rows[0]["d_p"].as_u64()),
        (Some(0), Some(0))
    );

    assert_eq!(
        run(&["pairdist", "--p", "2", "--x", "1,0", "--y", "1,0,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn mds_command_lists_true_sets() {
    let list = |p: &str, e: &str| {
        let (code, rows) = json(&["mds", "--p", p, "--e", e]);
        assert_eq!(code, 0);
        column(&rows, "i")
    };
    assert_eq!(list("5", "1"), ints(&[0, 1, 2, 3]));
    // d_p = i + 2 also holds at i = 4 and i = 7 for p = 3, e = 2 (d_p = 6, 9)
    assert_eq!(list("3", "2"), ints(&[0, 1, 2, 4, 7]));
    assert_eq!(list("2", "3"), ints(&[0, 1, 2, 6]));
}

#[test]
fn simulate_command() {
    let (code, rows) = json(&[
        "simulate", "--p", "3", "--e", "2", "--m", "1", "--i", "4", "--t", "2", "--trials", "100",
        "--seed", "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(rows[0]["success_rate"], 1.0);
    assert_eq!(rows[0]["threshold"], 2);
    assert_eq!(rows[0]["guaranteed"], true);

    let (_, rows) = json(&[
        "simulate", "--p", "3", "--e", "2", "--i", "4", "--t", "0", "--seed", "3",
    ]);
    assert_eq!(rows[0]["success_rate"], 1.0);

    let (code, rows) = json(&[
        "simulate", "--p", "2", "--e", "2", "--m", "1", "--i", "1", "--t", "1", "--trials", "100",
        "--seed", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(rows[0]["success_rate"], 1.0);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let cases: [&[&str]; 3] = [
        &["--format", "tsv", "verify", "--p", "3", "--e", "2"],
        &[
            "--format", "tsv", "simulate", "--p", "3", "--e", "2", "--i", "1", "--t", "3",
            "--seed", "5",
        ],
        &[
            "--format", "json", "table", "--p", "2", "--e", "3", "--m", "2",
        ],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        let mut jobs = vec!["--jobs", "3"];
        jobs.extend_from_slice(args);
        let c = run(&jobs);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, c.stdout, "{args:?}");
    }
}
