//! Black-box tests of the command-line interface: verb output, pipelines,
//! exit codes, and file export.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_latkit"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(data) = stdin {
        child
            .stdin
            .take()
            .expect("stdin piped")
            .write_all(data.as_bytes())
            .expect("stdin accepts input");
    }
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn gadget_pipes_into_congruence_listing() {
    let gadget = run(&["construct", "w-gadget", "--seed", "m3"], None);
    assert!(gadget.status.success(), "{}", stderr_of(&gadget));
    let con = run(&["con"], Some(&stdout_of(&gadget)));
    assert!(con.status.success(), "{}", stderr_of(&con));
    assert!(stdout_of(&con).starts_with("3 congruences"));
}

#[test]
fn cfi_of_the_rank_three_boolean_lattice() {
    let out = run(&["cfi", "--lattice", "boolean:3"], None);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "⟨8, 8, 8⟩");
}

#[test]
fn export_json_round_trips_through_a_file() {
    let out = run(&["export", "--lattice", "hexagon", "--json"], None);
    assert!(out.status.success());
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("hexagon.json");
    std::fs::write(&path, stdout_of(&out)).expect("write temp json");
    let con = run(&["con", "--lattice", path.to_str().unwrap()], None);
    assert!(con.status.success());
    assert!(stdout_of(&con).starts_with("7 congruences"));
}

#[test]
fn export_dot_writes_an_upward_hasse_diagram() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("m3.dot");
    let out = run(&["export", "--lattice", "m3", "--dot", path.to_str().unwrap()], None);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).expect("dot file written");
    assert!(dot.contains("rankdir=BT"));
    assert!(dot.contains("->"));
}

#[test]
fn export_without_a_format_is_a_usage_error() {
    let out = run(&["export", "--lattice", "m3"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strict_json_rejects_unknown_keys() {
    let doc = r#"{"elements": ["0", "1"], "covers": [["0", "1"]], "extra": 1}"#;
    let out = run(&["con"], Some(doc));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("unknown field"));
}

#[test]
fn unknown_verbs_are_usage_errors() {
    let out = run(&["frobnicate"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_lattice_files_are_domain_errors() {
    let out = run(&["con", "--lattice", "no-such-file.json"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identity_check_reports_the_first_counterexample() {
    let out = run(&["check-identity", "--lattice", "n5", "modular"], None);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "fails at x = c, y = b, z = a");
    let holds = run(&["check-identity", "--lattice", "boolean:2", "distributive"], None);
    assert_eq!(stdout_of(&holds).trim(), "holds");
}

#[test]
fn automorphism_report_in_json() {
    let out = run(&["aut", "--lattice", "m3", "--json"], None);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(doc["order"], 6);
}

#[test]
fn subspace_lattice_built_from_field_parameters() {
    let out = run(&["build", "--p", "2", "--n", "3"], None);
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("valid lattice: 16 elements"));
}

#[test]
fn composite_construction_pipes_into_congruence_count() {
    let built = run(&["construct", "freese-composite", "--m", "1", "--n", "1"], None);
    assert!(built.status.success(), "{}", stderr_of(&built));
    let con = run(&["con"], Some(&stdout_of(&built)));
    assert!(stdout_of(&con).starts_with("6 congruences"));
}

#[test]
fn principal_congruence_poset_of_the_hexagon() {
    let out = run(&["princ", "--lattice", "hexagon"], None);
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("6 principal congruences"));
}

#[test]
fn verification_suite_exit_code_matches_its_summary() {
    let out = run(&["paper-check"], None);
    let text = stdout_of(&out);
    let summary = text
        .lines()
        .rev()
        .find(|line| line.contains("checks passed"))
        .expect("summary line present");
    let (passed, total) = summary
        .split_once('/')
        .map(|(a, b)| {
            let total: usize =
                b.split_whitespace().next().unwrap().parse().expect("total parses");
            (a.parse::<usize>().expect("count parses"), total)
        })
        .expect("summary has a fraction");
    assert_eq!(total, 11);
    let expected = if passed == total { Some(0) } else { Some(1) };
    assert_eq!(out.status.code(), expected);
    assert!(text.contains("subspace lattice counts"));
}
