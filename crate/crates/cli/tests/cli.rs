use std::path::PathBuf;
use std::process::{Command, Output};

const GOLDEN: &str = r#"{"left": [{"node": "i", "value": "1"}], "right": [{"node": "1+j", "value": "0"}]}"#;
const GOLDEN_POLY: &str = "(4/5+3/5*i+2/5*j-1/5*k) + (-3/5-1/5*i+1/5*j+2/5*k) z";

fn problem(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{name}.json"));
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewlagrange"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn golden_text() {
    let f = problem("golden", GOLDEN);
    let o = run(&["--format", "text", "interp", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        format!("status: solved\npolynomial: {GOLDEN_POLY}\ndegree: 1\n")
    );
}

#[test]
fn golden_json_round_trips_through_verify() {
    let f = problem("golden-json", GOLDEN);
    let o = run(&["interp", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "solved");
    assert_eq!(v["degree"], 1);
    let poly = v["polynomial"].as_str().unwrap();
    let o = run(&["verify", poly, f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass: all 2 conditions hold"));
}

#[test]
fn conjugate_conflict_exits_2_with_witness() {
    let f = problem(
        "bad",
        r#"{"left": [{"node": "i", "value": "1"}], "right": [{"node": "j", "value": "0"}]}"#,
    );
    let o = run(&["--format", "text", "interp", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("witness: left[0] right[0]"), "{}", stdout(&o));
}

#[test]
fn empty_problem_gives_zero() {
    let f = problem("empty", r#"{"left": [], "right": []}"#);
    let o = run(&["--format", "text", "interp", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "status: solved\npolynomial: 0\ndegree: -\n");
}

#[test]
fn conjugate_pair_reports_homogeneous_directions() {
    let f = problem(
        "family",
        r#"{"left": [{"node": "i", "value": "1"}], "right": [{"node": "j", "value": "1"}]}"#,
    );
    let o = run(&["--format", "text", "interp", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("polynomial: (1)\n"), "{out}");
    assert_eq!(out.matches("homogeneous[").count(), 2);

    let o = run(&["--format", "text", "interp", "--degree-bound", "3", f.to_str().unwrap()]);
    assert_eq!(stdout(&o).matches("homogeneous[").count(), 6);
}

#[test]
fn dependent_nodes_need_reduce() {
    let f = problem(
        "dependent",
        r#"{"left": [{"node": "i", "value": "1"}, {"node": "j", "value": "k"}, {"node": "k", "value": "0"}], "right": []}"#,
    );
    let o = run(&["interp", "--side", "left", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--reduce"));

    let o = run(&["--format", "text", "interp", "--side", "left", "--reduce", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("witness: left[2]"));

    let g = problem(
        "dependent-ok",
        r#"{"left": [{"node": "i", "value": "1"}, {"node": "j", "value": "k"}, {"node": "k", "value": "-j"}], "right": []}"#,
    );
    let o = run(&["--format", "text", "interp", "--side", "left", "--reduce", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("forced left[2]"));
}

#[test]
fn extend_within_a_class() {
    let f = problem(
        "extend",
        r#"{"left": [{"node": "i", "value": "1"}, {"node": "j", "value": "k"}], "right": []}"#,
    );
    let o = run(&["extend", f.to_str().unwrap(), "k"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-j");
}

#[test]
fn minpoly_of_i_and_j() {
    let o = run(&["minpoly", "i", "j"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("z^2 + 1\n"), "{}", stdout(&o));
}

#[test]
fn independence() {
    let o = run(&["independent", "i", "j"]);
    assert_eq!(stdout(&o).trim(), "left P-independent");
    let o = run(&["independent", "i", "j", "k"]);
    assert!(stdout(&o).contains("P-dependent"));
}

#[test]
fn sylvester_canonical_form() {
    let o = run(&["sylvester", "i", "j", "i-j"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("1-k"), "{out}");
    assert!(out.contains("i+j"), "{out}");

    let o = run(&["sylvester", "i", "j", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_rejects_zero() {
    let f = problem("verify-zero", GOLDEN);
    let o = run(&["verify", "0", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("fail:"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["interp"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_name_their_location() {
    let f = problem("bad-node", r#"{"left": [{"node": "i+", "value": "1"}], "right": []}"#);
    let o = run(&["interp", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("left[0].node: parse error at column 3"), "{}", stderr(&o));

    let f = problem("bad-json", "{\"left\": [\n  {\"node\": \"i\",}\n]}");
    let o = run(&["interp", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2, column"), "{}", stderr(&o));
}

#[test]
fn oracle_self_check_agrees() {
    let o = run(&["--seed", "5", "oracle", "--count", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["disagreements"], 0);
}
