use std::process::{Command, Output};

use serde_json::Value;
use zerosum::{Precision, Real};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zerosum"))
        .args(args)
        .env_remove("ZEROSUM_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).expect("valid json")
}

fn sum(v: &Value, n: u64, method: &str) -> String {
    v["sums"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["n"] == n && r["method"] == method)
        .map(|r| r["value"].as_str().unwrap().to_string())
        .unwrap()
}

#[test]
fn bessel_first_sum() {
    let v = json(&["sums", "--function", "bessel", "--nu", "0", "--order", "5"]);
    assert!(sum(&v, 1, "recurrence").starts_with("0.2500000000000000000000000000"));
    assert_eq!(v["sums"].as_array().unwrap().len(), 10);
    assert_eq!(v["function"], "bessel");
}

#[test]
fn qairy_second_sum() {
    let v = json(&[
        "sums",
        "--function",
        "qairy",
        "--q",
        "0.5",
        "--order",
        "2",
        "--method",
        "recurrence",
    ]);
    assert!(sum(&v, 2, "recurrence").starts_with("0.666666666666666666666666666666"));
    assert!(v["sums"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["method"] == "recurrence"));
}

#[test]
fn sinc_first_sum_is_zeta_two() {
    let v = json(&["sums", "--function", "sinc", "--order", "1"]);
    let p = Precision::default();
    let z2 = Real::pi(p).powi(2) / 6;
    let got = Real::parse(&sum(&v, 1, "recurrence"), p).unwrap();
    assert!(got.rel_close(&z2, &p.tolerance(2)));
}

#[test]
fn sigmas_included_on_request() {
    let v = json(&[
        "sums",
        "--function",
        "bessel",
        "--nu",
        "1/2",
        "--order",
        "3",
        "--sigmas",
    ]);
    let sig = v["sigmas"].as_array().unwrap();
    assert_eq!(sig.len(), 4);
    assert_eq!(
        sig[0]["value"].as_str().unwrap().trim_end_matches('0'),
        "1."
    );
    let v = json(&[
        "sums",
        "--function",
        "bessel",
        "--nu",
        "1/2",
        "--order",
        "3",
    ]);
    assert!(v.get("sigmas").is_none());
}

#[test]
fn json_values_round_trip() {
    let v = json(&[
        "sums",
        "--function",
        "airy",
        "--order",
        "6",
        "--sigmas",
        "--precision",
        "40",
    ]);
    let p = Precision::digits(40);
    let mut seen = 0;
    for key in ["sums", "sigmas"] {
        for row in v[key].as_array().unwrap() {
            let s = row["value"].as_str().unwrap();
            assert_eq!(Real::parse(s, p).unwrap().to_decimal(40), s);
            seen += 1;
        }
    }
    assert_eq!(seen, 12 + 7);
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    let o = run(&[
        "sums",
        "--function",
        "airy",
        "--order",
        "6",
        "--sigmas",
        "--precision",
        "40",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&o), again);
}

#[test]
fn text_and_json_agree() {
    let args = [
        "sums",
        "--function",
        "qbessel",
        "--nu",
        "2",
        "--q",
        "0.3",
        "--order",
        "4",
    ];
    let v = json(&args);
    let text = stdout(&run(&args));
    for row in v["sums"].as_array().unwrap() {
        let line = format!(
            "s_{} [{}] = {}",
            row["n"],
            row["method"].as_str().unwrap(),
            row["value"].as_str().unwrap()
        );
        assert!(text.contains(&line), "{line}");
    }
}

#[test]
fn csv_layout() {
    let o = run(&[
        "sums",
        "--function",
        "bessel",
        "--nu",
        "0",
        "--order",
        "3",
        "--method",
        "recurrence",
        "--format",
        "csv",
    ]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,sigma,s_recurrence,s_determinant");
    assert_eq!(lines.len(), 4);
    let cells: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cells.len(), 4);
    assert_eq!(cells[1], "");
    assert_eq!(cells[3], "");
    assert!(cells[2].starts_with("0.25"));
}

#[test]
fn verify_bessel_passes() {
    let v = json(&[
        "verify",
        "--function",
        "bessel",
        "--nu",
        "1",
        "--order",
        "5",
    ]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 6);
    assert!(checks.iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn verify_airy_with_oracle() {
    let o = run(&["verify", "--function", "airy", "--order", "3", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS airy-normalization"));
    assert_eq!(out.matches("PASS oracle s_").count(), 3);
}

#[test]
fn verify_zeta_with_oracle() {
    let v = json(&["verify", "--function", "zeta", "--order", "4", "--oracle"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "PASS"));
    assert!(checks.iter().any(|c| c["name"] == "oracle s_1"));
}

#[test]
fn moments_tables() {
    let v = json(&["moments", "--function", "zeta", "--order", "4"]);
    let rows = v["moments"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let beta0 = Real::parse(rows[0]["beta"].as_str().unwrap(), Precision::default()).unwrap();
    assert_eq!(beta0, Real::one(Precision::default()));
    let v = json(&[
        "moments",
        "--function",
        "dirichlet",
        "--discriminant",
        "-4",
        "--order",
        "3",
    ]);
    assert_eq!(v["params"]["a"], "1");
    assert_eq!(v["moments"].as_array().unwrap().len(), 4);
    let v = json(&[
        "moments",
        "--function",
        "dirichlet",
        "--discriminant",
        "5",
        "--order",
        "3",
    ]);
    assert_eq!(v["params"]["a"], "0");
}

#[test]
fn oracle_command_reports_zeros() {
    let v = json(&[
        "oracle",
        "--function",
        "qairy",
        "--q",
        "0.5",
        "--order",
        "2",
        "--zeros",
        "40",
    ]);
    assert_eq!(v["zeros"].as_array().unwrap().len(), 40);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "PASS"));
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_zerosum"))
        .args([
            "sums",
            "--function",
            "sinc",
            "--order",
            "1",
            "--format",
            "json",
        ])
        .env("ZEROSUM_PRECISION", "35")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision"], 35);
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        vec!["sums", "--function", "bessel"],
        vec!["sums", "--function", "sinc", "--nu", "1"],
        vec!["sums", "--function", "qairy", "--q", "1.5"],
        vec!["sums", "--function", "bessel", "--nu", "-2"],
        vec!["sums", "--function", "sinc", "--precision", "20"],
        vec!["sums", "--function", "sinc", "--order", "0"],
        vec!["sums", "--function", "sinc", "--scale", "0"],
        vec![
            "sums",
            "--function",
            "dirichlet",
            "--discriminant",
            "16",
            "--order",
            "2",
        ],
        vec!["sums", "--function", "dirichlet", "--discriminant", "9"],
        vec!["sums", "--function", "zeta", "--order", "13"],
        vec!["moments", "--function", "bessel", "--nu", "0"],
        vec!["sums", "--function", "gamma"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
