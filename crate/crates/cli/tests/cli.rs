use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerpair"))
        .args(args)
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_prints_explicit_coefficients() {
    let o = run(&["compute", "C", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + 3*x + 3*x^2 + 1*x^3\n");
}

#[test]
fn compute_json_round_trips() {
    let o = run(&["compute", "L", "--n", "3", "--all", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["name"], "L");
    assert_eq!(v["values"].as_array().unwrap().len(), 4);
    assert_eq!(v["values"][2]["text"], "1*x + 1*x^2 + 1*x^3");
    let back = eulerpair::IntPoly::from_json(&v["values"][3]["coefficients"]).unwrap();
    assert_eq!(back.to_string(), v["values"][3]["text"].as_str().unwrap());
}

#[test]
fn verify_reports_one_line() {
    let o = run(&["verify", "DBA", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "DBA n≤4 PASS\n");
    let o = run(&["verify", "NOPE"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_small_budget() {
    let o = run(&["verify", "all", "--n-max", "3", "--threads", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().any(|l| l == "GAMMA-L n≤3 PASS"));
}

#[test]
fn derive_missing_file_is_a_usage_error() {
    let o = run(&["derive", "missing.eurec"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing.eurec"));
}

#[test]
fn derive_lists_the_pair_system() {
    let o = run(&["derive", "../core/corpus/L.eurec", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("  u = 1 - x + 2*n*x\n"), "{out}");
    assert!(out.ends_with("duality n≤4 PASS\n"));
}

#[test]
fn derive_reports_positioned_diagnostics() {
    let o = run(&["derive", "../core/corpus/malformed/quadratic.eurec"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).trim(), "../core/corpus/malformed/quadratic.eurec:2:15: error: coefficient not affine in n");
}

#[test]
fn enumerate_and_analyze() {
    let o = run(&["enumerate", "signed", "--n", "2", "--stats", "fdes"]);
    assert_eq!(stdout(&o), "1 + 3*x + 3*x^2 + 1*x^3\n");
    let o = run(&["enumerate", "stirling", "--n", "2", "--stats", "ap,lap", "--format", "csv"]);
    assert_eq!(stdout(&o), "ap,lap,count\n0,1,1\n1,1,1\n1,2,1\n");
    let o = run(&["analyze", "M", "--n", "5", "--checks", "alternating,real_rooted"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["analyze", "M", "--n", "3", "--checks", "symmetric"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["analyze", "A", "--n", "4", "--checks", "unknown_check"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn series_and_bad_verbs() {
    let o = run(&["series", "C-SCALE", "--order", "6"]);
    assert_eq!(stdout(&o), "C-SCALE order 6 PASS\n");
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
