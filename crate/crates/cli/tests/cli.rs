//! End-to-end checks of the `tosswait` binary.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tosswait"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn expect_reports_profit_and_overlaps() {
    let text = stdout(&["expect", "HH", "--stake", "5"]);
    assert!(text.contains("expected tosses: 6"));
    assert!(text.contains("expected profit: +1"));

    let doc = json(&["expect", "10101"]);
    assert_eq!(doc["command"], "expect");
    assert_eq!(doc["inputs"]["pattern"], "10101");
    assert_eq!(doc["results"]["expected_tosses"], 42);
    assert_eq!(doc["results"]["overlaps"], serde_json::json!([1, 3, 5]));

    let doc = json(&["expect", "TH", "--stake", "5"]);
    assert_eq!(doc["results"]["expected_profit"], -1);
}

#[test]
fn bad_patterns_are_usage_errors() {
    for args in [
        &["expect", ""][..],
        &["expect", "2x"],
        &["expect", "10H"],
        &["dist", "11", "--horizon", "1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["--format", "xml", "expect", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn big_values_are_json_strings() {
    let ones = "1".repeat(60);
    let doc = json(&["expect", &ones]);
    assert_eq!(doc["results"]["expected_tosses"], "2305843009213693950");
    assert_eq!(doc["results"]["lower_bound"], "1152921504606846976");
    let doc = json(&["expect", "1111111111"]);
    assert_eq!(doc["results"]["expected_tosses"], 2046);
}

#[test]
fn fixed_width_overflow_exits_with_three() {
    let ones = "1".repeat(64);
    let out = run(&["--int", "u64", "expect", &ones]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("overflow"));
    assert!(run(&["expect", &ones]).status.success());
    assert_eq!(
        run(&["--int", "u64", "dist", "1111", "--horizon", "80"])
            .status
            .code(),
        Some(3)
    );
    assert!(run(&["--int", "u128", "dist", "1111", "--horizon", "80"])
        .status
        .success());
}

#[test]
fn table_text_matches_golden_file() {
    let text = stdout(&["table", "--lengths", "2..6"]);
    assert_eq!(text, include_str!("golden/table_2_6.txt"));
}

#[test]
fn table_machine_outputs_round_trip() {
    let csv_text = stdout(&["--format", "csv", "table", "--lengths", "2..7"]);
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["length", "average", "pattern"]
    );
    let mut from_csv: BTreeMap<(u64, u64), Vec<String>> = BTreeMap::new();
    for record in reader.records() {
        let r = record.unwrap();
        from_csv
            .entry((r[0].parse().unwrap(), r[1].parse().unwrap()))
            .or_default()
            .push(r[2].to_string());
    }
    assert!(csv_text.ends_with('\n'));

    let doc = json(&["table", "--lengths", "2..7"]);
    let mut from_json: BTreeMap<(u64, u64), Vec<String>> = BTreeMap::new();
    for row in doc["results"].as_array().unwrap() {
        let key = (
            row["length"].as_u64().unwrap(),
            row["average"].as_u64().unwrap(),
        );
        let patterns = row["patterns"].as_array().unwrap();
        from_json.insert(
            key,
            patterns
                .iter()
                .map(|p| p.as_str().unwrap().to_string())
                .collect(),
        );
    }
    assert_eq!(from_csv, from_json);
    assert_eq!(
        from_json.values().map(Vec::len).sum::<usize>(),
        2 + 4 + 8 + 16 + 32 + 64
    );

    // The text rendering lists the same groups.
    let text = stdout(&["table", "--lengths", "2..7"]);
    for ((_, average), patterns) in &from_json {
        let line = text
            .lines()
            .find(|l| {
                l.split_whitespace()
                    .any(|w| w.trim_end_matches(',') == patterns[0])
            })
            .unwrap();
        assert!(line.contains(&average.to_string()));
        assert!(line.contains(&patterns.join(", ")));
    }
}

#[test]
fn table_range_is_checked() {
    assert_eq!(run(&["table", "--lengths", "1..3"]).status.code(), Some(1));
    assert_eq!(run(&["table", "--lengths", "13"]).status.code(), Some(1));
    assert!(run(&["table", "--lengths", "13", "--max-length", "13"])
        .status
        .success());
    let all = json(&["table", "--lengths", "3", "--all"]);
    let total: usize = all["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["patterns"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 8);
}

#[test]
fn dist_rows_are_exact() {
    let doc = json(&["dist", "01", "--horizon", "4"]);
    let row = &doc["results"]["rows"][3];
    assert_eq!(row["n"], 4);
    assert_eq!(row["tau"], 3);
    assert_eq!(row["probability"], "3/16");
    assert_eq!(row["probability_decimal"], "0.1875");
    assert_eq!(doc["results"]["residual"], "5/16");

    let csv_text = stdout(&["--format", "csv", "dist", "11", "--horizon", "3"]);
    let last = csv_text.lines().last().unwrap();
    assert_eq!(last, "3,1,5,1/8,0.125,3/8,0.375");
}

#[test]
fn simulate_reports_z_score() {
    let doc = json(&["simulate", "10", "--trials", "1", "--seed", "7"]);
    let mean = doc["results"]["sample_mean"].as_f64().unwrap();
    assert!(mean >= 2.0 && mean.fract() == 0.0);

    let doc = json(&["simulate", "HHT", "--trials", "100000", "--seed", "1"]);
    assert_eq!(doc["results"]["exact"], 8);
    assert!(doc["results"]["z_score"].as_f64().unwrap().abs() < 4.0);
    assert_eq!(doc["results"]["generator"], "ChaCha8Rng");
    assert_eq!(
        json(&["simulate", "HHT", "--trials", "100000", "--seed", "1"]),
        doc,
        "same seed, same output"
    );
    assert_eq!(
        run(&["simulate", "1", "--trials", "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_passes_and_checks_ranges() {
    let out = run(&["verify", "--lengths", "2..4", "--horizon", "32"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("all identities hold"));

    let doc = json(&["verify", "--lengths", "2..2", "--oracle-n", "12"]);
    let checks = doc["results"]["checks"].as_array().unwrap();
    let names: Vec<&str> = checks
        .iter()
        .map(|c| c["pattern"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["10", "11"]);
    assert!(checks.iter().all(|c| c["passed"] == true));

    assert_eq!(
        run(&["verify", "--lengths", "13..13"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "--lengths", "2..6", "--horizon", "10"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["verify", "--oracle-n", "30"]).status.code(), Some(1));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("tosswait-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = run(&[
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
        "table",
        "--lengths",
        "3",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("length,average,pattern\n3,8,100\n"));
    std::fs::remove_dir_all(dir).unwrap();
}
