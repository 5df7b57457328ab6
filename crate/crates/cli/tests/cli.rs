use std::path::PathBuf;
use std::process::Command;

use abelcover_cli::{run, Outcome};
use abelcover_core::fixtures::EX1;
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn abelcover(args: &[&str]) -> Outcome {
    run(std::iter::once("abelcover").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = abelcover(&all);
    (out.code, serde_json::from_str(&out.stdout).expect("json output"))
}

#[test]
fn invariants_of_ex1() {
    let out = abelcover(&["invariants", &fixture("ex1.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("K^2 = 6\n"));
    assert!(out.stdout.contains("chi(O_X) = 1\n"));

    let (code, v) = json(&["invariants", &fixture("ex1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "invariants");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["results"]["k_square"], serde_json::json!([6, 1]));
    assert_eq!(v["results"]["chi_ox"], 1);
}

#[test]
fn invariants_of_the_six_cycle() {
    let (code, v) = json(&["invariants", &fixture("sixcycle.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["k_square"], serde_json::json!([6, 1]));
    assert_eq!(v["results"]["chi_ox"], 1);
    assert_eq!(v["results"]["relevant"], serde_json::json!({ "y": 1 }));
}

#[test]
fn table_one_regenerates() {
    let out = abelcover(&["tables", "--table", "1", "--regenerate"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("Table 1: 16 classes, 16 rows, all matched\n"));
    let (_, v) = json(&["tables", "--table", "1", "--regenerate"]);
    assert_eq!(v["results"][0]["matched"].as_array().unwrap().len(), 16);
}

#[test]
fn tables_print_every_row() {
    let (code, v) = json(&["tables"]);
    assert_eq!(code, 0);
    let counts: Vec<usize> =
        v["results"].as_array().unwrap().iter().map(|t| t["rows"].as_array().unwrap().len()).collect();
    assert_eq!(counts, [16, 22, 11, 6, 4, 4, 23, 25, 19]);
    let text = abelcover(&["tables", "--table", "7"]).stdout;
    assert!(text.lines().any(|l| l.starts_with("R4.2 ") && l.contains("1234 01")));
}

#[test]
fn classify_point_reports_the_row() {
    let out = abelcover(&["classify-point", &fixture("ex1.json"), "--point", "y1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("point y1: E4.2 (Table 4)\n"));
}

#[test]
fn unknown_point_is_an_input_error() {
    let out = abelcover(&["classify-point", &fixture("ex1.json"), "--point", "q"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("unknown point `q`"));
    let (code, v) = json(&["classify-point", &fixture("ex1.json"), "--point", "q"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
}

#[test]
fn bad_command_lines_exit_two() {
    assert_eq!(abelcover(&["frobnicate"]).code, 2);
    assert_eq!(abelcover(&["invariants", &fixture("ex1.json"), "--colour"]).code, 2);
    assert_eq!(abelcover(&["classify-point", &fixture("ex1.json")]).code, 2);
    assert_eq!(abelcover(&["tables", "--table", "10"]).code, 2);
    assert_eq!(abelcover(&["invariants", "/nonexistent/doc.json"]).code, 2);
    assert_eq!(abelcover(&["--help"]).code, 0);
}

#[test]
fn malformed_documents_exit_two() {
    let path = scratch("malformed.json", "{ \"version\": \"1\", ");
    assert_eq!(abelcover(&["validate", &path]).code, 2);
    let path = scratch("unknown_key.json", &EX1.replacen("\"version\": \"1\"", "\"version\": \"1\", \"extra\": 0", 1));
    assert_eq!(abelcover(&["invariants", &path]).code, 2);
    let path = scratch("dangling.json", &EX1.replacen("\"D1_2_f\", \"D1_2_s\"", "\"D1_2_f\", \"nowhere\"", 1));
    let out = abelcover(&["validate", &path]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("nowhere"));
}

#[test]
fn failed_gluing_exits_one() {
    let moved = EX1.replacen(
        r#"{"id": "y1", "on": ["C", "D1_2_f", "D1_2_s", "D2_3_a", "D2_3_b"]}"#,
        r#"{"id": "y1", "on": ["C", "D1_2_f", "D1_2_s", "D2_3_b"]}"#,
        1,
    );
    let path = scratch("moved.json", &moved);
    let out = abelcover(&["glue-check", &path]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("y1"));
    assert_eq!(abelcover(&["invariants", &path]).code, 1);
    assert_eq!(abelcover(&["glue-check", &fixture("ex1.json")]).code, 0);
}

#[test]
fn index_and_local_equations() {
    let out = abelcover(&["index", &fixture("sixcycle.json"), "--point", "y"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "y: 1\n"));
    let out = abelcover(&["local-eq", &fixture("ex1.json"), "--point", "y1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("z_chi(0,1)^2 = s[D1_2_f] s[D1_2_s]"));
}

#[test]
fn output_is_deterministic() {
    let runs: [&[&str]; 5] = [
        &["invariants", &fixture("ex1.json"), "--format", "json"],
        &["invariants", &fixture("sixcycle.json")],
        &["validate", &fixture("ex1.json")],
        &["local-eq", &fixture("ex1.json"), "--point", "y2", "--format", "json"],
        &["tables", "--table", "8"],
    ];
    for args in runs {
        assert_eq!(abelcover(args), abelcover(args), "{args:?}");
    }
}

#[test]
fn binary_forwards_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_abelcover");
    let ok = Command::new(bin).args(["invariants", &fixture("ex1.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("K^2 = 6"));
    let bad = Command::new(bin).args(["classify-point", &fixture("ex1.json"), "--point", "q"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
