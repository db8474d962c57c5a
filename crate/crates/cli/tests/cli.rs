use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn domb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domb"))
        .args(args)
        .env_remove("DOMB_MAX_INDEX")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|line| serde_json::from_str(line).expect("valid json line"))
        .collect()
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    let text = stdout(out);
    let mut rows = vec![];
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    for record in reader.records() {
        rows.push(record.unwrap().iter().map(str::to_string).collect());
    }
    rows
}

/// Every payload value is a decimal string, a boolean, null, or a list of
/// strings.
fn assert_schema(record: &Value, kind: &str) {
    assert_eq!(record["schema_version"], "1");
    assert_eq!(record["kind"], kind);
    for (key, value) in record["payload"].as_object().unwrap() {
        match value {
            Value::String(_) | Value::Bool(_) | Value::Null => {}
            Value::Array(xs) => assert!(xs.iter().all(Value::is_string), "{key}"),
            other => panic!("{key} is a raw JSON value {other}"),
        }
    }
}

#[test]
fn seq_examples() {
    let out = domb(&["seq", "domb", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last(), Some("31504"));
    assert_eq!(
        stdout(&domb(&[
            "seq", "gendomb", "--n", "0", "--A", "3", "--B", "2", "--C", "2"
        ])),
        "1\n"
    );
    assert_eq!(
        stdout(&domb(&["seq", "apery", "--n", "2"])).lines().last(),
        Some("73")
    );
}

#[test]
fn seq_large_values_are_strings() {
    let out = domb(&["--format", "json", "seq", "apery", "--n", "60"]);
    let records = json_lines(&out);
    assert_eq!(records.len(), 61);
    for record in &records {
        assert_schema(record, "sequence");
    }
    let last = records[60]["payload"]["value"].as_str().unwrap();
    assert!(last.len() > 20 && last.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn verify_examples() {
    let out = domb(&[
        "--format", "json", "verify", "theorem", "--p", "5", "--m", "1", "--r", "1", "--A", "2",
        "--B", "1", "--C", "1",
    ]);
    assert!(out.status.success());
    let record = &json_lines(&out)[0];
    assert_schema(record, "congruence");
    assert_eq!(record["payload"]["holds"], true);
    assert_eq!(record["payload"]["difference_valuation"], "3");

    let out = domb(&[
        "--format", "json", "verify", "steps", "--p", "5", "--m", "1", "--n", "1", "--r", "1",
        "--s", "1", "--A", "2", "--B", "1", "--C", "1",
    ]);
    assert!(out.status.success());
    assert_eq!(
        json_lines(&out)[0]["payload"]["difference_valuation"],
        "inf"
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["seq"],
        vec!["seq", "domb"],
        vec!["seq", "domb", "--n", "-1"],
        vec!["seq", "domb", "--n", "2001"],
        vec![
            "seq", "gendomb", "--n", "3", "--A", "0", "--B", "1", "--C", "1",
        ],
        vec!["verify", "gessel", "--p", "9", "--n", "1"],
        vec!["verify", "gessel", "--p", "3", "--n", "1"],
        vec![
            "verify", "theorem", "--p", "5", "--m", "1", "--r", "1", "--A", "1", "--B", "1", "--C",
            "1",
        ],
        vec![
            "verify", "prop21", "--p", "5", "--m", "1", "--r", "1", "--j", "4",
        ],
        vec!["verify", "campaign", "--config", "/nonexistent.json"],
        vec!["qcheck", "domb", "--order", "0"],
    ] {
        let out = domb(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn max_index_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_domb"))
        .args(["seq", "domb", "--n", "11"])
        .env("DOMB_MAX_INDEX", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(domb(&["--max-index", "11", "seq", "domb", "--n", "11"])
        .status
        .success());
}

#[test]
fn qcheck_reports_agreement() {
    let out = domb(&[
        "--format",
        "json",
        "qcheck",
        "apery",
        "--order",
        "2",
        "--emit-coefficients",
    ]);
    assert!(out.status.success());
    let record = &json_lines(&out)[0];
    assert_schema(record, "qcheck");
    assert_eq!(record["payload"]["agrees"], true);
    assert_eq!(record["payload"]["form_coefficients"][1], "5");
    assert_eq!(record["payload"]["expansion_coefficients"][1], "5");
    assert!(domb(&["qcheck", "domb", "--order", "1"]).status.success());
}

fn write_config(text: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    file
}

fn path(file: &tempfile::NamedTempFile) -> &str {
    file.path().to_str().unwrap()
}

const SMALL: &str = r#"{"claims": ["theorem", "weak", "gessel", "central", "key", "ratio"],
    "primes": [5, 7], "m_range": [1, 2], "r_range": [1, 2], "A_range": [2, 2],
    "B_range": [1, 2], "C_range": [1, 2]}"#;

#[test]
fn campaign_csv_and_json_carry_the_same_data() {
    let config = write_config(SMALL);
    let json = domb(&[
        "--format",
        "json",
        "verify",
        "campaign",
        "--config",
        path(&config),
    ]);
    let csv = domb(&[
        "--format",
        "csv",
        "verify",
        "campaign",
        "--config",
        path(&config),
    ]);
    assert!(json.status.success() && csv.status.success());

    let records = json_lines(&json);
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), records.len() + 1);
    let header = &rows[0];
    for (record, row) in records.iter().zip(&rows[1..]) {
        assert_schema(record, "congruence");
        for (column, cell) in header.iter().zip(row) {
            let value = match column.as_str() {
                "schema_version" | "kind" => &record[column],
                _ => &record["payload"][column],
            };
            let expected = match value {
                Value::String(s) => s.clone(),
                Value::Null => String::new(),
                other => other.to_string(),
            };
            if column != "elapsed_milliseconds" {
                assert_eq!(cell, &expected, "column {column}");
            }
        }
    }
}

#[test]
fn config_format_applies_and_flag_overrides() {
    let config = write_config(r#"{"claims": ["central"], "primes": [5], "format": "json"}"#);
    let out = domb(&["verify", "campaign", "--config", path(&config)]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out).len(), 4);
    let out = domb(&[
        "--format",
        "plain",
        "verify",
        "campaign",
        "--config",
        path(&config),
    ]);
    assert!(stdout(&out).lines().all(|l| l.starts_with("central p=5")));
}

#[test]
fn config_rejects_unknown_keys() {
    let config = write_config(r#"{"claims": ["central"], "prime": [5]}"#);
    let out = domb(&["verify", "campaign", "--config", path(&config)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown field"));
}

#[test]
fn default_campaign_holds() {
    let out = domb(&["verify", "campaign"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).lines().all(|line| line.contains(" holds ")));
}
