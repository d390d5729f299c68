use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const A2_CUBE: &str = r#"{"algebra":{"family":"A","rank":2},"L":[{"node":1,"width":1,"multiplicity":3}]}"#;
const A2_MIXED: &str = r#"{"algebra":{"family":"A","rank":2},
  "L":[{"node":1,"width":2,"multiplicity":1},{"node":2,"width":1,"multiplicity":1}]}"#;
const B22: &str = r#"{"algebra":{"family":"A","rank":3},"L":[{"node":2,"width":2,"multiplicity":1}],
  "lambda":[1,0,1,2],"element":[[[1,0]],[[2,-1],[1,-1]],[[2,-1]]]}"#;
const D4: &str = r#"{"algebra":{"family":"D","rank":4},"L":[{"node":2,"width":1,"multiplicity":1}]}"#;
const EXTENDED: &str = r#"{"algebra":{"family":"A","rank":3},"L":[{"node":1,"width":1,"multiplicity":6}],
  "lambda":[2,2,1,1],"element":[[[3,-2],[1,0]],[[2,0]],[[1,-1]]]}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

fn rigged(args: &[&str], file: &Path) -> Output {
    rigged_env(args, file, None)
}

fn rigged_env(args: &[&str], file: &Path, cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rigged"));
    cmd.args(&args[..1]).arg(file).args(&args[1..]);
    cmd.env_remove("RIGGED_MAX_VERTICES");
    if let Some(cap) = cap {
        cmd.env("RIGGED_MAX_VERTICES", cap);
    }
    cmd.output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn verify_reports_the_a2_cube() {
    let ws = Workspace::new();
    let out = rigged(&["verify"], &ws.file("a2.json", A2_CUBE));
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("axioms: all pass; components: 4; |RC(L)| = 27"));
    assert!(!text.contains("violated"), "{text}");
}

#[test]
fn verify_on_d4() {
    let ws = Workspace::new();
    let out = rigged(&["verify", "--json"], &ws.file("d4.json", D4));
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["axioms_pass"], Value::Bool(true));
    assert_eq!(v["size"], Value::from(29));
}

#[test]
fn fermionic_both_agrees_on_a2_instances() {
    let ws = Workspace::new();
    for (name, text) in [("cube.json", A2_CUBE), ("mixed.json", A2_MIXED)] {
        let out = rigged(&["fermionic", "--both"], &ws.file(name, text));
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
        assert!(!stdout(&out).contains("MISMATCH"));
    }
}

#[test]
fn fermionic_single_lambda_prints_the_polynomial_only() {
    let ws = Workspace::new();
    let inst =
        r#"{"algebra":{"family":"A","rank":2},"L":[{"node":1,"width":1,"multiplicity":3}],"lambda":[1,1,1]}"#;
    let path = ws.file("a2.json", inst);
    let f = rigged(&["fermionic"], &path);
    let d = rigged(&["direct"], &path);
    assert_eq!(stdout(&f), "q^0: 1\nq^1: 2\nq^2: 2\nq^3: 1\n");
    assert_eq!(stdout(&f), stdout(&d));
}

#[test]
fn fermionic_on_type_d_is_an_input_error() {
    let ws = Workspace::new();
    let out = rigged(&["fermionic"], &ws.file("d4.json", D4));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("type A"), "{}", stderr(&out));
}

#[test]
fn promote_reproduces_the_b22_example() {
    let ws = Workspace::new();
    let path = ws.file("b22.json", B22);
    let out = rigged(&["promote", "--compact"], &path);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "() | (1,0) | (1,-1)\n");

    let out = rigged(&["promote", "--json", "--trace"], &path);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result_lambda"], serde_json::json!([2, 1, 0, 1]));
    assert_eq!(
        v["trace"]["lifted"]["strings"],
        serde_json::json!([[[2, -1]], [[2, 1], [1, 0]], [[2, -1], [1, -1]], [[2, -1]]])
    );
    assert_eq!(v["trace"]["passes"].as_array().unwrap().len(), 2);
}

#[test]
fn f0_and_e0_are_inverse() {
    let ws = Workspace::new();
    let path = ws.file("b22.json", B22);
    let out = rigged(&["f0", "--json"], &path);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let image = &v["result"]["strings"];
    assert_eq!(image, &serde_json::json!([[], [[2, -1]], [[1, -1]]]));
    let back = format!(
        r#"{{"algebra":{{"family":"A","rank":3}},"L":[{{"node":2,"width":2,"multiplicity":1}}],"element":{image}}}"#
    );
    let out = rigged(&["e0", "--compact"], &ws.file("image.json", &back));
    assert_eq!(stdout(&out), "(1,0) | (2,-1)(1,-1) | (2,-1)\n");
}

#[test]
fn extended_reports_membership_and_witness() {
    let ws = Workspace::new();
    let out = rigged(&["extended", "--json", "--vacancies"], &ws.file("ext.json", EXTENDED));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["member"], Value::Bool(true));
    let witnesses: Vec<&str> =
        v["witnesses"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    assert!(witnesses.contains(&"441/32/2/1"));
    assert!(!witnesses.contains(&"441/33/2/1"));
    assert_eq!(v["element"]["vacancies"], serde_json::json!([[0, 3], [0], [-1]]));
}

#[test]
fn graph_dot_round_trips_through_json() {
    let ws = Workspace::new();
    let inst =
        r#"{"algebra":{"family":"A","rank":2},"L":[{"node":1,"width":1,"multiplicity":3}],"weight":[1,1]}"#;
    let path = ws.file("a2.json", inst);
    let json_out = rigged(&["graph"], &path);
    let dot_out = rigged(&["graph", "--dot"], &path);
    assert_eq!(json_out.status.code(), Some(0));
    let from_json = rigged_core::GraphFile::from_json(&stdout(&json_out)).unwrap();
    let from_dot = rigged_core::GraphFile::from_dot(&stdout(&dot_out)).unwrap();
    assert_eq!(from_json, from_dot);
    assert_eq!(from_json.vertices.len(), 8);

    let dot_file = ws.file("g.dot", &stdout(&dot_out));
    let out = Command::new(env!("CARGO_BIN_EXE_rigged")).arg("verify-graph").arg(&dot_file).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("axioms: all pass; vertices: 8"));
}

#[test]
fn broken_graph_fails_with_a_witness() {
    let ws = Workspace::new();
    let inst = ws.file("a2.json", A2_CUBE);
    let text = stdout(&rigged(&["graph", "--component", "1"], &inst));
    let mut file = rigged_core::GraphFile::from_json(&text).unwrap();
    file.edges[0].color = 3 - file.edges[0].color;
    let out = Command::new(env!("CARGO_BIN_EXE_rigged"))
        .arg("verify-graph")
        .arg(ws.file("bad.json", &file.to_json()))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness"), "{}", stdout(&out));
}

#[test]
fn closure_and_oracle_on_the_cube() {
    let ws = Workspace::new();
    let path = ws.file("a2.json", A2_CUBE);
    let out = rigged(&["closure"], &path);
    let text = stdout(&out);
    assert!(text.starts_with("|RC(L)| = 27\ncomponents: 4\n"), "{text}");
    assert!(text.contains("weight (0,0) lambda (1,1,1): 6"), "{text}");

    let out = rigged(&["oracle"], &path);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("lambda (1,1,1): paths 6, rigged configurations 6"));
}

#[test]
fn hw_lists_highest_weights_of_the_given_weight() {
    let ws = Workspace::new();
    let inst =
        r#"{"algebra":{"family":"A","rank":2},"L":[{"node":1,"width":1,"multiplicity":3}],"weight":[1,1]}"#;
    let out = rigged(&["hw", "--compact"], &ws.file("a2.json", inst));
    assert_eq!(stdout(&out), "weight (1,1): 2 highest-weight\n(1,1) | ()\n(1,0) | ()\n");
}

#[test]
fn outputs_are_deterministic() {
    let ws = Workspace::new();
    let path = ws.file("a2.json", A2_MIXED);
    for args in [&["verify"][..], &["closure", "--json"], &["graph", "--dot"], &["hw", "--vacancies"]] {
        let first = rigged(args, &path);
        let second = rigged(args, &path);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn input_errors_exit_with_two() {
    let ws = Workspace::new();
    let cases = [
        ("unknown field", r#"{"algebra":{"family":"A","rank":2},"L":[],"bogus":true}"#, "closure"),
        ("malformed", "{not json", "closure"),
        ("missing element", A2_CUBE, "promote"),
        (
            "element outside RC(L)",
            r#"{"algebra":{"family":"A","rank":2},"L":[{"node":1,"width":1,"multiplicity":3}],"element":[[[1,-5]],[]]}"#,
            "f0",
        ),
    ];
    for (what, text, cmd) in cases {
        let out = rigged(&[cmd], &ws.file("bad.json", text));
        assert_eq!(out.status.code(), Some(2), "{what}: {}", stderr(&out));
        assert!(stderr(&out).starts_with("error: "), "{what}");
    }
    let out = rigged(&["closure"], &ws.dir.path().join("missing.json"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vertex_cap_comes_from_the_environment() {
    let ws = Workspace::new();
    let path = ws.file("a2.json", A2_CUBE);
    let out = rigged_env(&["closure"], &path, Some("10"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("vertex cap of 10"), "{}", stderr(&out));
    assert_eq!(rigged_env(&["closure"], &path, Some("27")).status.code(), Some(0));
    assert_eq!(rigged_env(&["closure"], &path, Some("lots")).status.code(), Some(2));
}
