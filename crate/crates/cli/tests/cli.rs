use std::fs;

use assert_cmd::Command;

fn daisy() -> Command {
    Command::cargo_bin("daisy").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = daisy().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn vertex_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#') && !l.is_empty()).collect()
}

#[test]
fn build_lucas_4() {
    let text = stdout(&["build", "--family", "lucas", "--n", "4"]);
    assert_eq!(vertex_lines(&text).len(), 7);
    assert!(text.contains("# n=4 vertices=7 edges=8 maximal=2"));
}

#[test]
fn build_from_generator_file() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("gens.txt");
    fs::write(&gens, "110\n011\n101\n").unwrap();
    let text = stdout(&["build", "--generators", gens.to_str().unwrap()]);
    assert_eq!(vertex_lines(&text).len(), 7);
    assert_eq!(text.lines().filter(|l| l.starts_with("# max ")).count(), 3);
}

#[test]
fn build_output_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.txt");
    daisy().args(["build", "--family", "run-free", "--k", "3", "--n", "7", "--out"]).arg(&first).assert().success();
    let again = stdout(&["build", "--generators", first.to_str().unwrap()]);
    let original = fs::read_to_string(&first).unwrap();
    assert_eq!(vertex_lines(&again), vertex_lines(&original));
    let a = stdout(&["build", "--family", "run-free", "--k", "3", "--n", "7"]);
    assert_eq!(a, original);
}

#[test]
fn census_vertex_deleted_cube() {
    let text = stdout(&["census", "--family", "vertex-deleted", "--n", "3", "--anchor", "000"]);
    assert!(text.contains("D = 1 + 3*y + 3*x + 3*y^2 + 6*x*y + 3*x^2\n"), "{text}");
    assert!(text.contains("W = 1 + 3*x + 3*x^2\n"));
    assert!(text.contains("engine: both (agree)"));
}

#[test]
fn census_square_from_far_corner() {
    let text = stdout(&["census", "--family", "hypercube", "--n", "2", "--anchor", "11", "--format", "csv"]);
    assert_eq!(text, "k,d,count\n0,0,1\n0,1,2\n0,2,1\n1,0,2\n1,1,2\n2,0,1\n");
}

#[test]
fn census_single_vertex() {
    let text = stdout(&["census", "--family", "fibonacci", "--n", "0"]);
    assert!(text.contains("C = 1\nD = 1\nW = 1\n"), "{text}");
}

#[test]
fn census_writes_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    daisy()
        .args(["census", "--family", "lucas", "--n", "5", "--format", "json", "--out"])
        .arg(&out)
        .assert()
        .success();
    assert!(fs::read_to_string(out.join("census.csv")).unwrap().starts_with("k,d,count\n"));
    let w: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("W.json")).unwrap()).unwrap();
    assert_eq!(w["vars"], serde_json::json!(["x"]));
}

#[test]
fn census_rejects_bad_anchor() {
    daisy().args(["census", "--family", "lucas", "--n", "4", "--anchor", "01"]).assert().code(2);
    daisy().args(["census", "--family", "lucas", "--n", "4", "--anchor", "01x0"]).assert().code(2);
}

#[test]
fn series_hypercube_and_lucas() {
    let text = stdout(&["series", "--family", "hypercube", "--m", "3"]);
    assert!(text.contains("n=3\n  f = 1 + 3*x + 3*x^2 + x^3\n  g = 8 + 12*x + 6*x^2 + x^3\n"), "{text}");
    assert!(text.ends_with(": ok\n"));
    let text = stdout(&["series", "--family", "lucas", "--m", "2"]);
    assert!(text.contains("n=2\n"));
    daisy().args(["series", "--family", "lucas", "--m", "31"]).assert().code(2);
}

#[test]
fn verify_suite_passes() {
    let text = stdout(&["verify", "--suite", "paper", "--max-n", "6", "--random", "20"]);
    assert!(text.trim_end().ends_with(" 0 failed"), "{text}");
}

#[test]
fn verify_partial_cube_failure_has_witness() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "000\n001\n011\n111\n110\n").unwrap();
    let out = daisy().args(["verify", "--check", "partial-cube", "--vertices"]).arg(&bad).assert().code(1);
    let text = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    assert!(text.starts_with("FAIL partial-cube"));
    assert!(text.contains("witness:"));
}

#[test]
fn verify_single_checks() {
    let text = stdout(&["verify", "--check", "tree-like", "--family", "hypercube", "--n", "1"]);
    assert!(text.starts_with("PASS tree-like"));
    stdout(&["verify", "--check", "q3-minus-values"]);
    stdout(&["verify", "--check", "d-from-c", "--family", "lucas", "--n", "6", "--format", "json"]);
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("mixed.txt");
    fs::write(&bad, "110\n01\n").unwrap();
    let out = daisy().args(["build", "--generators"]).arg(&bad).assert().code(2);
    assert!(String::from_utf8_lossy(&out.get_output().stderr).contains("line 2"));
    daisy().args(["build"]).assert().code(2);
    daisy().args(["build", "--family", "nope", "--n", "3"]).assert().code(2);
}
