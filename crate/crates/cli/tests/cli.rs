use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use orbit_hilbert::universal::{variety_degree, variety_dimension};
use orbit_hilbert::vogel::{derived_params, vogel_params};
use orbit_hilbert::LieType;
use orbit_hilbert_cli::record::to_json;
use orbit_hilbert_cli::OutputRecord;
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbit-hilbert"));
    cmd.env_remove("ORBIT_HILBERT_MAX_TERMS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn orbit-hilbert")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&ok(&full)).unwrap()
}

fn data(path: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(path)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn params_e6_matches_table_row() {
    let v = json(&["params", "E6"]);
    for (key, want) in [("a1", "11"), ("a2", "9"), ("a3", "8"), ("b1", "3"), ("b2", "4"), ("deg_X", "151164")] {
        assert_eq!(v[key], want, "{key}");
    }
    assert_eq!(v["dim_X"], 21);
}

#[test]
fn params_is_case_insensitive() {
    let v = json(&["params", "g2"]);
    assert_eq!(v["type"], "G2");
    assert_eq!(v["a2"], "7/3");
}

#[test]
fn out_of_range_rank_is_a_domain_error() {
    let out = run(&["params", "B1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("B1"));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["series", "A1", "--terms", "x"]).status.code(), Some(1));
}

#[test]
fn schema_keys_are_stable() {
    let keys = |v: &Value| -> Vec<String> { v.as_object().unwrap().keys().cloned().collect() };
    let expected = keys(&json(&["params", "A3"]));
    for args in [&["series", "A3"][..], &["polynomial", "A3"], &["degree", "A3"], &["ideal", "A3"]] {
        assert_eq!(keys(&json(args)), expected, "{args:?}");
    }
    for key in
        ["type", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "dim_X", "deg_X", "coefficients", "numerator", "verdicts"]
    {
        assert!(expected.contains(&key.to_string()), "{key}");
    }
}

#[test]
fn series_examples() {
    assert_eq!(strings(&json(&["series", "A1", "--terms", "3"])["coefficients"]), ["1", "3", "5", "7"]);
    assert_eq!(strings(&json(&["series", "E8", "--terms", "0"])["coefficients"]), ["1"]);
    assert_eq!(strings(&json(&["series", "A2", "--terms", "2"])["coefficients"]), ["1", "8", "27"]);
    assert_eq!(
        ok(&["series", "A1", "--terms", "2", "--format", "csv"]),
        "type,k,coefficient\nA1,0,1\nA1,1,3\nA1,2,5\n"
    );
}

#[test]
fn term_cap_and_override() {
    let out = run(&["series", "A1", "--terms", "10001"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("10000"));

    let out = bin().args(["series", "A1", "--terms", "5"]).env("ORBIT_HILBERT_MAX_TERMS", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(["series", "A1", "--terms", "5"]).env("ORBIT_HILBERT_MAX_TERMS", "5").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn series_at_the_cap_is_fast_enough() {
    let v = json(&["series", "E8", "--terms", "10000"]);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 10001);
}

#[test]
fn polynomial_and_degree() {
    let p = json(&["polynomial", "A1"]);
    // dim S^k(sl2) restricted to the cone is 2k + 1
    assert_eq!(strings(&p["coefficients"]), ["1", "2"]);
    let d = json(&["degree", "G2"]);
    assert_eq!(d["deg_X"], "18");
    assert_eq!(d["dim_X"], 5);
    assert_eq!(strings(&d["numerator"]), ["1", "8", "8", "1"]);
}

#[test]
fn ideal_examples() {
    assert_eq!(strings(&json(&["ideal", "A1", "--terms", "2"])["coefficients"]), ["0", "0", "1"]);
    assert_eq!(strings(&json(&["ideal", "E8", "--terms", "0"])["coefficients"]), ["0"]);
    for ty in ["A4", "C3", "F4"] {
        assert_eq!(strings(&json(&["ideal", ty, "--terms", "1"])["coefficients"]), ["0", "0"]);
    }
}

#[test]
fn table_d4() {
    let v = json(&["table", "D4"]);
    assert_eq!(v[0]["dim_X"], 9);
    assert_eq!(v[0]["deg_X"], "168");
}

#[test]
fn empty_table_is_header_only() {
    assert_eq!(ok(&["table", "--format", "csv"]), "type,a1,a2,a3,a4,b1,b2,b3,dim_X,deg_X\n");
    assert_eq!(ok(&["table"]).lines().count(), 1);
    assert_eq!(ok(&["table", "--format", "json"]).trim(), "[]");
}

#[test]
fn table_all_matches_golden_files() {
    for (format, file) in
        [("csv", "golden/table_all.csv"), ("json", "golden/table_all.json"), ("plain", "golden/table_all.txt")]
    {
        let got = ok(&["table", "--all", "--format", format]);
        assert_eq!(got, fs::read_to_string(data(file)).unwrap(), "{format}");
    }
}

#[test]
fn table_all_exceptional_rows() {
    let csv = fs::read_to_string(data("golden/table_all.csv")).unwrap();
    for row in [
        "E6,11,9,8,13/2,3,4,11/2,21,151164",
        "E7,17,14,12,19/2,4,6,17/2,33,141430680",
        "E8,29,24,20,31/2,6,10,29/2,57,126937516885200",
        "F4,8,13/2,6,5,5/2,3,4,15,4992",
        "G2,3,7/3,8/3,5/2,5/3,4/3,3/2,5,18",
    ] {
        assert!(csv.lines().any(|l| l == row), "{row}");
    }
    assert_eq!(csv.lines().count(), 1 + 8 + 7 + 7 + 6 + 5);
}

#[test]
fn json_round_trips_to_library_values() {
    let text = ok(&["table", "--all", "--format", "json"]);
    let rows: Vec<OutputRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(to_json(&rows, false).unwrap(), text);
    for row in &rows {
        let ty: LieType = row.lie_type.parse().unwrap();
        let u = derived_params(&vogel_params(ty)).unwrap();
        assert_eq!(
            [&row.a1, &row.a2, &row.a3, &row.a4, &row.b1, &row.b2, &row.b3].map(|x| x.clone().unwrap()),
            [u.a1.clone(), u.a2.clone(), u.a3.clone(), u.a4.clone(), u.b1.clone(), u.b2.clone(), u.b3.clone()]
        );
        assert_eq!(row.deg_x.as_ref(), Some(&variety_degree(&u).unwrap()));
        assert_eq!(row.dim_x, Some(variety_dimension(&u).unwrap() as u64));
    }
}

#[test]
fn json_round_trips_every_command() {
    for args in [
        &["params", "F4"][..],
        &["series", "E7", "--terms", "12"],
        &["polynomial", "G2"],
        &["degree", "E6"],
        &["ideal", "B3", "--terms", "6"],
    ] {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let text = ok(&full);
        let record: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&[record], true).unwrap(), text, "{args:?}");
    }
    let text = ok(&["verify", "G2", "C3", "--terms", "4", "--format", "json"]);
    let records: Vec<OutputRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(to_json(&records, false).unwrap(), text);
    assert_eq!(records[0].verdicts.as_ref().unwrap().len(), 10);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.csv");
    let out = run(&["series", "G2", "--terms", "2", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), "type,k,coefficient\nG2,0,1\nG2,1,14\nG2,2,77\n");
}

#[test]
fn verify_single_type_passes() {
    let v = json(&["verify", "A1", "--terms", "5"]);
    let verdicts = v[0]["verdicts"].as_array().unwrap();
    assert!(verdicts.iter().all(|x| x["passed"] == true));
    assert!(verdicts.iter().any(|x| x["check"] == "oracle_equivalence"));
}

#[test]
fn verify_defaults_to_every_type() {
    let v = json(&["verify"]);
    let types: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["type"].as_str().unwrap()).collect();
    assert_eq!(types.len(), 33);
    assert_eq!(types.first(), Some(&"A1"));
    assert_eq!(types.last(), Some(&"G2"));
    assert!(v.as_array().unwrap().iter().all(|r| r["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["passed"] == true)));
}

#[test]
fn injected_fault_fails_with_named_check() {
    let fixture = data("fixtures/corrupted_g2.csv");
    let out = run(&["verify", "G2", "A2", "--terms", "6", "--vogel-table", fixture.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("G2 oracle_equivalence at k = 1"), "{err}");
    assert!(stdout(&out)
        .lines()
        .any(|l| l.starts_with("G2") && l.contains("oracle_equivalence") && l.contains("false")));
    assert!(!stdout(&out).lines().any(|l| l.starts_with("A2") && l.contains("false")));
}
