//! End-to-end tests driving the compiled binary: output shapes and exit
//! codes (0 success, 1 verification failure, 2 usage/parse error).

use std::process::{Command, Output};

fn pathmaps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathmaps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process not killed by signal")
}

#[test]
fn count_values() {
    let out = pathmaps(&["count", "r", "--n", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "394\n");

    let out = pathmaps(&["count", "delannoy", "--n", "2", "--k", "2"]);
    assert_eq!(stdout(&out), "13\n");

    let out = pathmaps(&["count", "e-pc", "--n", "3"]);
    assert_eq!(stdout(&out), "14\n");

    let out = pathmaps(&["count", "j-po", "--n", "2", "--k", "1"]);
    assert_eq!(stdout(&out), "6\n");
}

#[test]
fn count_usage_errors() {
    // unknown family
    assert_eq!(exit_code(&pathmaps(&["count", "bogus", "--n", "3"])), 2);
    // missing k on a two-parameter family
    assert_eq!(exit_code(&pathmaps(&["count", "f-pc", "--n", "3"])), 2);
    // stray k on a sequence family
    assert_eq!(exit_code(&pathmaps(&["count", "r", "--n", "3", "--k", "1"])), 2);
    // out-of-domain n
    assert_eq!(exit_code(&pathmaps(&["count", "e-tn", "--n", "0"])), 2);
    // missing subcommand arguments are clap usage errors
    assert_eq!(exit_code(&pathmaps(&["count"])), 2);
}

#[test]
fn table_formats() {
    let out = pathmaps(&["table", "r", "--max-n", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,value\n0,1\n1,2\n2,6\n3,22\n");

    let out = pathmaps(&["table", "catalan", "--max-n", "2", "--format", "json"]);
    assert_eq!(stdout(&out), "[1,1,2]\n");

    let out = pathmaps(&["table", "g-pc", "--max-n", "3", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("n,k,value\n"));
    assert!(text.contains("3,2,8\n"));

    // csv is the default format
    let out = pathmaps(&["table", "delannoy", "--max-n", "3"]);
    assert_eq!(stdout(&out), "n,value\n0,1\n1,3\n2,13\n3,63\n");
}

#[test]
fn convert_directions() {
    let out = pathmaps(&[
        "convert",
        "to-path",
        r#"{"n":7,"m":8,"map":[[0,0],[2,0],[3,0],[5,4],[6,4]]}"#,
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "HHHVDVVHHDVV\n");

    let out = pathmaps(&["convert", "to-path", r#"{"n":3,"m":4,"map":[]}"#]);
    assert_eq!(stdout(&out), "DDD\n");

    // square maps are accepted and widened implicitly
    let out = pathmaps(&["convert", "to-path", r#"{"n":4,"m":4,"map":[[1,1],[3,1]]}"#]);
    assert_eq!(stdout(&out), "DHHVDV\n");

    let out = pathmaps(&["convert", "to-map", "HVVDVHH", "--n", "4"]);
    assert_eq!(stdout(&out), "{\"n\":4,\"m\":5,\"map\":[[0,0],[1,4],[3,4]]}\n");

    let out = pathmaps(&["convert", "to-map", "DHHVDV", "--n", "4"]);
    assert_eq!(stdout(&out), "{\"n\":4,\"m\":5,\"map\":[[1,1],[3,1]]}\n");
}

#[test]
fn convert_parse_errors() {
    assert_eq!(exit_code(&pathmaps(&["convert", "to-path", "{not json}"])), 2);
    // order-violating map
    assert_eq!(
        exit_code(&pathmaps(&["convert", "to-path", r#"{"n":2,"m":2,"map":[[0,1],[1,0]]}"#])),
        2
    );
    // wrong endpoint
    assert_eq!(exit_code(&pathmaps(&["convert", "to-map", "HH", "--n", "1"])), 2);
    // bad character
    assert_eq!(exit_code(&pathmaps(&["convert", "to-map", "HXV", "--n", "1"])), 2);
}

#[test]
fn convert_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("walk.svg");
    let out = pathmaps(&[
        "convert",
        "to-map",
        "HHHVDVVHHDVV",
        "--n",
        "7",
        "--svg",
        file.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let svg = std::fs::read_to_string(&file).unwrap();
    assert!(svg.contains("<svg"));
    assert!(svg.contains("<polyline"));
    assert!(svg.contains("stroke-dasharray"));
}

#[test]
fn enumerate_listings() {
    let out = pathmaps(&["enumerate", "pc", "--n", "2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "{\"n\":2,\"m\":2,\"map\":[]}");
    assert_eq!(lines[6], "count: 6");

    let out = pathmaps(&["enumerate", "paths", "--n", "1"]);
    assert_eq!(stdout(&out), "D\nHV\nVH\ncount: 3\n");

    let out = pathmaps(&["enumerate", "c", "--n", "1"]);
    assert_eq!(stdout(&out), "{\"n\":1,\"m\":1,\"map\":[[0,0]]}\ncount: 1\n");

    let out = pathmaps(&["enumerate", "paths", "--n", "2", "--subdiagonal", "--no-diag"]);
    assert_eq!(stdout(&out), "HHVV\nHVHV\ncount: 2\n");
}

#[test]
fn enumerate_guard_and_usage() {
    assert_eq!(exit_code(&pathmaps(&["enumerate", "pc", "--n", "13"])), 2);
    // raising the guard explicitly is allowed (count only, n stays small here)
    let out = pathmaps(&["enumerate", "qp", "--n", "3", "--guard", "13"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).ends_with("count: 11\n"));
    // filters are rejected on class listings
    assert_eq!(exit_code(&pathmaps(&["enumerate", "pc", "--n", "2", "--no-diag"])), 2);
    assert_eq!(exit_code(&pathmaps(&["enumerate", "nope", "--n", "2"])), 2);
}

#[test]
fn verify_small_run_passes() {
    let out = pathmaps(&[
        "verify",
        "--orders-max", "3",
        "--bijection-max", "3",
        "--fgj-max", "3",
        "--semigroup-max", "2",
        "--phi-max", "3",
        "--idempotents-max", "3",
        "--idem-paths-max", "2",
        "--tnpn-max", "2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    // the exploratory pattern check documents its minimal counterexample
    let pattern = checks
        .iter()
        .find(|c| c["check_id"] == "idempotents/path-pattern")
        .unwrap();
    assert_eq!(pattern["status"], "paper-ambiguity");
    assert!(pattern["counterexample"].as_str().unwrap().contains("VHHV"));
}

#[test]
fn verify_fixture_fails() {
    let out = pathmaps(&[
        "verify",
        "--fixture", "perturb-r",
        "--orders-max", "2",
        "--bijection-max", "2",
        "--fgj-max", "2",
        "--semigroup-max", "2",
        "--phi-max", "2",
        "--idempotents-max", "2",
        "--idem-paths-max", "1",
        "--tnpn-max", "1",
    ]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let failed: Vec<&serde_json::Value> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["check_id"], "orders/pc");
    assert!(failed[0]["counterexample"].as_str().unwrap().contains("n=1"));

    assert_eq!(exit_code(&pathmaps(&["verify", "--fixture", "bogus"])), 2);
}
