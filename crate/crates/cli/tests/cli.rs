//! End-to-end tests of the `mcf` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mcf_core::mcf::{ExpansionRecord, Status};
use mcf_core::pythagoras::PythagorasReport;
use mcf_core::scan::ScanResult;

fn mcf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcf"))
        .args(args)
        .env_remove("MCF_MAX_ITER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn manifest(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn fields_fixture() -> String {
    manifest("../core/fixtures/fields.json").display().to_string()
}

#[test]
fn expand_ennola1_reports_preperiod_and_period_two() {
    let o = mcf(&["expand", "--family", "ennola1:a=5", "--root", "rho", "--algo", "jpa"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: ExpansionRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((rec.l0, rec.l1), (Some(2), Some(2)));
    assert_eq!(rec.digits_i64(), vec![vec![1, 1], vec![2, 7], vec![0, 7], vec![0, 8]]);
}

#[test]
fn expansion_json_round_trips() {
    for algo in ["jpa", "ijpa", "brun"] {
        let root = if algo == "ijpa" { "rho'" } else { "rho" };
        let o = mcf(&["expand", "--family", "simplest:a=4", "--root", root, "--algo", algo, "--max-iter", "60"]);
        let text = stdout(&o);
        let rec: ExpansionRecord = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&rec).unwrap();
        assert_eq!(serde_json::from_str::<ExpansionRecord>(&again).unwrap(), rec, "{algo}");
        assert_eq!(again.trim_end(), text.trim_end(), "{algo}");
    }
}

#[test]
fn rational_vector_terminates_with_exit_zero() {
    let o = mcf(&["expand", "--vector", "1,0,0;2,0,0;3,0,0", "--family", "ennola1:a=3", "--algo", "jpa"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: ExpansionRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec.status, Status::Terminated);
}

#[test]
fn brun_on_simplest_cubic_exhausts_the_bound_with_exit_two() {
    let o = mcf(&["expand", "--family", "simplest:a=4", "--root", "rho", "--algo", "brun", "--max-iter", "10000"]);
    assert_eq!(o.status.code(), Some(2));
    let rec: ExpansionRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec.status, Status::BoundExhausted);
}

#[test]
fn max_iter_environment_variable_sets_the_default_bound() {
    let o = Command::new(env!("CARGO_BIN_EXE_mcf"))
        .args(["expand", "--family", "simplest:a=4", "--root", "rho", "--algo", "brun"])
        .env("MCF_MAX_ITER", "25")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let rec: ExpansionRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec.digits.len(), 25);
}

#[test]
fn catalog_of_ennola1_a4_has_fifteen_rows() {
    let o = mcf(&["catalog", "--family", "ennola1:a=4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 16);
}

#[test]
fn pythagoras_of_ennola1_a5_needs_six_squares() {
    let o = mcf(&["pythagoras", "--family", "ennola1:a=5"]);
    assert_eq!(o.status.code(), Some(0));
    let r: PythagorasReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.min_squares, 6);
    assert_eq!(r.squares.len(), 11);
}

#[test]
fn pythagoras_runs_several_families_in_parallel() {
    let o = mcf(&["pythagoras", "--family", "ennola1:a=4", "--family", "ennola1:a=5", "--jobs", "2"]);
    let r: Vec<PythagorasReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|r| r.min_squares == 6));
}

fn classify_flags(family: &str, root: &str) -> (u64, u64, bool, bool) {
    let o = mcf(&["classify", "--family", family, "--root", root, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    (
        v["l0"].as_u64().unwrap(),
        v["l1"].as_u64().unwrap(),
        v["conv"].as_bool().unwrap(),
        v["semiconv"].as_bool().unwrap(),
    )
}

#[test]
fn classify_generic_fields_with_ingested_units() {
    assert_eq!(classify_flags("generic:p=-1,q=-2,r=1,u1=(1,1,-1),u2=(2,1,-1)", "1.802"), (1, 2, true, true));
    assert_eq!(classify_flags("generic:p=1,q=-2,r=-1,u1=(1,1,0),u2=(1,-1,-1)", "1.247"), (2, 2, true, false));
    assert_eq!(classify_flags("generic:p=0,q=-4,r=1,u1=(0,2,1),u2=(4,0,-1)", "1.861"), (6, 3, true, true));
}

#[test]
fn classify_without_units_exits_three() {
    let o = mcf(&["classify", "--family", "generic:p=-1,q=-2,r=1", "--root", "1.802"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_one() {
    assert_eq!(mcf(&["expand", "--family", "ennola1:b=5"]).status.code(), Some(1));
    assert_eq!(mcf(&["expand", "--family", "ennola1:a=5", "--vector", "1,2"]).status.code(), Some(1));
    assert_eq!(mcf(&["expand", "--family", "ennola1:a=5", "--root", "sigma"]).status.code(), Some(1));
    assert_eq!(mcf(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn scan_json_round_trips() {
    let path = fields_fixture();
    let o = mcf(&["scan", "--input", &path, "--format", "json", "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let res: Vec<ScanResult> = serde_json::from_str(&text).unwrap();
    assert_eq!(res.len(), 18);
    let again = serde_json::to_string_pretty(&res).unwrap();
    assert_eq!(serde_json::from_str::<Vec<ScanResult>>(&again).unwrap(), res);
    assert_eq!(again.trim_end(), text.trim_end());
}

fn assert_golden(args: &[&str], golden: &str) {
    let o = mcf(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let want = std::fs::read_to_string(manifest(&format!("tests/golden/{golden}"))).unwrap();
    assert_eq!(stdout(&o), want, "{golden}");
}

#[test]
fn classification_csv_matches_golden_files() {
    assert_golden(&["classify", "--family", "simplest:a=4", "--root", "rho'"], "table2_simplest_a4.csv");
    assert_golden(&["classify", "--family", "simplest:a=5", "--root", "rho'"], "table3_simplest_a5.csv");
    assert_golden(&["classify", "--family", "ennola1:a=5", "--root", "rho"], "table4_ennola1_a5.csv");
    assert_golden(&["classify", "--family", "ennola1:a=5", "--root", "rho''"], "table5_ennola1_a5.csv");
}

#[test]
fn catalog_and_scan_csv_match_golden_files() {
    assert_golden(&["catalog", "--family", "ennola1:a=4"], "catalog_ennola1_a4.csv");
    let path = fields_fixture();
    assert_golden(&["scan", "--input", &path, "--jobs", "2"], "table10_11_scan.csv");
}
