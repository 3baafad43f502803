//! End-to-end tests of the `zetakit` binary.

use std::fs;
use std::process::{Command, Output};

use zetakit::Report;

fn zetakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(args)
        .env_remove("ZETAKIT_LIMIT")
        .env_remove("ZETAKIT_ZEROS")
        .env_remove("ZETAKIT_TOL_SCALE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ZEROS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_1000.txt");

#[test]
fn default_verify_passes() {
    let o = zetakit(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("-> PASS"));
}

#[test]
fn json_report_round_trips() {
    let o = zetakit(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.checks.len() >= 14);
    assert!(report.overall_pass);
    for c in &report.checks {
        assert_eq!((c.lhs - c.rhs).abs(), c.abs_err, "{}", c.name);
        assert_eq!(c.pass, c.abs_err <= c.tol);
    }
}

#[test]
fn csv_report_has_one_row_per_check() {
    let json: Report = serde_json::from_str(&stdout(&zetakit(&["verify", "--json"]))).unwrap();
    let csv = stdout(&zetakit(&["verify", "--csv"]));
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["name", "lhs", "rhs", "abs_err", "tol", "pass", "identity"]
    );
    let names: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[0].to_string())
        .collect();
    let expected: Vec<String> = json.checks.iter().map(|c| c.name.clone()).collect();
    assert_eq!(names, expected);
}

#[test]
fn runs_are_byte_identical() {
    let a = zetakit(&["verify", "--json", "--extended"]);
    let b = zetakit(&["verify", "--json", "--extended"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_tolerance_fails_verification() {
    let o = zetakit(&["verify", "--tol-scale", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_with_zero_file() {
    let o = zetakit(&["verify", "--zeros-file", ZEROS, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.config.zeros_used, 1000);
}

#[test]
fn corrupted_zero_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    fs::write(&path, "14.134725\n21.02204O\n25.010858\n").unwrap();
    let o = zetakit(&["verify", "--zeros-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty(), "no report on parse errors");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":2:"), "{err}");
}

#[test]
fn out_of_order_and_missing_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    fs::write(&path, "21.022040\n14.134725\n").unwrap();
    assert_eq!(
        zetakit(&["eval", "eta", "--zeros-file", path.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        zetakit(&["eval", "eta", "--zeros-file", "/no/such/file"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn env_zero_file_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(["eval", "eta", "--k", "100", "--csv"])
        .env("ZETAKIT_ZEROS", ZEROS)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("eta,\"K=100,tail=true\",value,0.0461982063"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn env_limit_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(["sieve-info", "--csv"])
        .env("ZETAKIT_LIMIT", "1000")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("prime_count,168"), "{}", stdout(&o));
}

#[test]
fn eval_examples() {
    let o = zetakit(&["eval", "product", "--route", "closed-form"]);
    assert!(stdout(&o).contains("value = 39.4784176044"));
    let o = zetakit(&["eval", "eta", "--zeros-file", ZEROS, "--k", "100", "--tail"]);
    assert!(stdout(&o).contains("value = 0.04619"), "{}", stdout(&o));
    let o = zetakit(&["eval", "zeta", "--s", "0"]);
    assert!(stdout(&o).contains("re = -0.500000000000"));
    let o = zetakit(&["eval", "zeta", "--s", "0.5,14.134725141734695", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["values"][0]["value"].as_f64().unwrap().abs() < 1e-12);
    let o = zetakit(&["eval", "psi", "--x", "100", "--limit", "1000"]);
    assert!(stdout(&o).contains("value = 94.0453112294"));
    let o = zetakit(&["eval", "big-pi", "--x", "10", "--limit", "100"]);
    assert!(stdout(&o).contains("value = 5.33333333333"));
}

#[test]
fn eval_errors() {
    assert_eq!(zetakit(&["eval", "gamma"]).status.code(), Some(2));
    assert_eq!(
        zetakit(&["eval", "psi", "--x", "2000", "--limit", "1000"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zetakit(&["eval", "prime-zeta", "--s", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(zetakit(&["bogus"]).status.code(), Some(2));
    assert_eq!(zetakit(&["--help"]).status.code(), Some(0));
}

#[test]
fn find_zeros_writes_a_loadable_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    let o = zetakit(&[
        "find-zeros",
        "--t-max",
        "30",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t = zetakit::zeros::load_zeros(&path).unwrap();
    let expected = [14.134725, 21.022040, 25.010858];
    assert_eq!(t.len(), 3);
    for (a, b) in t.ordinates().iter().zip(expected) {
        assert!((a - b).abs() < 1e-6);
    }

    let o = zetakit(&["find-zeros", "--t-max", "100", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 29);

    assert_eq!(
        zetakit(&["find-zeros", "--t-max", "600"]).status.code(),
        Some(2)
    );
}
