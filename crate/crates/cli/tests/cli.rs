//! End-to-end tests of the binary: exit codes, format contracts, and the
//! published command examples.

use std::path::PathBuf;
use std::process::{Command, Output};

use twisted_chains::report::{BettiReport, SigmaReport, StratumReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twisted-chains"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout utf8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr utf8")
}

#[test]
fn betti_text_prints_the_series() {
    let out = run(&["betti", "3", "-1", "2", "--format", "text"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1+x^2+3x^4+4x^6+3x^8"), "{}", stdout(&out));
}

#[test]
fn rank_four_is_refused_naming_the_composition() {
    let out = run(&["betti", "4", "-1", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("[2, 2]"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["betti", "3", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["betti", "3", "-1", "2", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_round_trips_byte_identically() {
    let out = run(&["betti", "3", "-1", "6", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: BettiReport = serde_json::from_str(&text).expect("parses as report");
    let mut again = serde_json::to_string_pretty(&report).expect("serializes");
    again.push('\n');
    assert_eq!(text, again);

    let out = run(&[
        "sigma", "--ranks", "1,2,1", "--degrees", "0,-1,-2", "--twist", "5", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: SigmaReport = serde_json::from_str(&text).expect("parses as report");
    let mut again = serde_json::to_string_pretty(&report).expect("serializes");
    again.push('\n');
    assert_eq!(text, again);

    let out = run(&[
        "stratum",
        "--ranks",
        "1,2,1",
        "--degrees",
        "2,-1,-2",
        "--twist",
        "5",
        "--splitting",
        "0,-1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: StratumReport = serde_json::from_str(&text).expect("parses as report");
    let mut again = serde_json::to_string_pretty(&report).expect("serializes");
    again.push('\n');
    assert_eq!(text, again);
}

#[test]
fn formats_carry_identical_numeric_content() {
    let json = stdout(&run(&["betti", "3", "-1", "6", "--format", "json"]));
    let report: BettiReport = serde_json::from_str(&json).unwrap();
    let coeffs: Vec<String> = report
        .series
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();

    let csv_text = stdout(&run(&["betti", "3", "-1", "6", "--format", "csv"]));
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), coeffs.len());
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.get(3).unwrap(), i.to_string());
        assert_eq!(row.get(4).unwrap(), coeffs[i]);
        assert_eq!(row.get(5).unwrap(), report.euler_characteristic);
    }

    let text = stdout(&run(&["betti", "3", "-1", "6", "--format", "text"]));
    let mut compact = String::new();
    for (i, c) in coeffs.iter().enumerate().filter(|(_, c)| *c != "0") {
        if !compact.is_empty() {
            compact.push('+');
        }
        match (i, c.as_str()) {
            (0, c) => compact.push_str(c),
            (i, "1") => compact.push_str(&format!("x^{i}")),
            (i, c) => compact.push_str(&format!("{c}x^{i}")),
        }
    }
    assert!(text.contains(&compact), "{text} missing {compact}");
    assert!(text.contains(&format!(
        "euler_characteristic: {}",
        report.euler_characteristic
    )));
}

#[test]
fn sigma_example_reports_vector_and_determinant() {
    let out = run(&["sigma", "--ranks", "1,2,1", "--degrees", "0,-1,-2", "--twist", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sigma: 1/4, 1/4"), "{text}");
    assert!(text.contains("determinant: 2"), "{text}");
    assert!(text.contains("determinant_closed_form: 2"), "{text}");
}

#[test]
fn stratum_reports_geometry_and_dimensions() {
    let out = run(&[
        "stratum",
        "--ranks",
        "1,2,1",
        "--degrees",
        "2,-1,-2",
        "--twist",
        "5",
        "--splitting",
        "0,-1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("geometry: P^2 x P^3 x P^6"), "{text}");
    assert!(text.contains("geometry_dimension: 11"), "{text}");
    assert!(text.contains("formula_dimension: 11"), "{text}");
}

#[test]
fn stratum_warns_on_the_revised_closure() {
    let out = run(&[
        "stratum",
        "--ranks",
        "1,2,1",
        "--degrees",
        "2,0,-3",
        "--twist",
        "6",
        "--splitting",
        "1,-1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("geometry: P^2 x P^3 x P^7"));
    assert!(
        stderr(&out).contains("previously tabulated as P^2 x P^3 x P^9"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn dimension_defaults_and_explicit_values_agree() {
    let out = run(&["dimension", "--ranks", "1,2,1", "--degrees", "2,-1,-2", "--twist", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dimension: 11"));
    let out = run(&[
        "dimension",
        "--ranks",
        "1,2,1",
        "--degrees",
        "2,-1,-2",
        "--twist",
        "5",
        "--h0-end",
        "1,4,1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dimension: 11"));
    let out = run(&[
        "dimension", "--ranks", "1,1", "--degrees", "0,1", "--twist", "2", "--genus", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_counts_match_prediction_and_reject_bad_moduli() {
    let out = run(&["oracle", "--degrees", "1,2", "--q", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("count: 16"), "{text}");
    assert!(text.contains("matches: true"), "{text}");
    let out = run(&["oracle", "--degrees", "1,2", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["oracle", "--degrees", "5,5,5", "--q", "7", "--oracle-budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strict_mode_fails_on_unverified_components() {
    let out = run(&["betti", "3", "-1", "8"]);
    assert!(out.status.success());
    let out = run(&["betti", "3", "-1", "8", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("unverified"), "{}", stderr(&out));
    let out = run(&["betti", "3", "-1", "6", "--strict"]);
    assert!(out.status.success());
}

#[test]
fn out_flag_writes_the_same_payload_to_a_file() {
    let path: PathBuf = std::env::temp_dir().join(format!("betti-{}.json", std::process::id()));
    let direct = stdout(&run(&["betti", "3", "-1", "2", "--format", "json"]));
    let out = run(&[
        "betti",
        "3",
        "-1",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(direct, written);
}

#[test]
fn runs_are_deterministic() {
    let first = stdout(&run(&["components", "3", "-1", "6", "--format", "json"]));
    let second = stdout(&run(&["components", "3", "-1", "6", "--format", "json"]));
    assert_eq!(first, second);
    assert!(!first.is_empty());
}
