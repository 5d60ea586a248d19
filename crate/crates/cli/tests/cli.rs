use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use gizatullin::corpus::PairGenerator;
use serde_json::{json, Value};
use tempfile::TempDir;

fn giz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_giz")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

fn doc(plus: &[(&str, &str)], minus: &[(&str, &str)]) -> Value {
    json!({ "d_plus": plus, "d_minus": minus })
}

#[test]
fn analyze_danilov_gizatullin() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "dg.json", &doc(&[("0", "-1/3")], &[("1", "-1")]));
    let o = giz(&["analyze", &f]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("zigzag [[0,0,-2,-2,-2]] smooth"), "{out}");
    assert!(out.contains("toric: no"));
    assert!(out.contains("w_s: -2"));
}

#[test]
fn analyze_toric_plane() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.json", &doc(&[("0", "-1/2")], &[("0", "1/3")]));
    let out = stdout(&giz(&["analyze", &f]));
    assert!(out.contains("toric (d,e)=(1,0)"), "{out}");
    assert!(out.contains("zigzag [[0,0]] smooth"));
}

#[test]
fn analyze_singular_points() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "s.json", &doc(&[("0", "1/2")], &[("0", "-3/2"), ("4", "-1")]));
    let o = giz(&["--json", "analyze", &f]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["smooth"], false);
    assert_eq!(v["singular_points"][0], json!({ "point": "0", "delta": 4, "e": 1 }));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let garbage = dir.path().join("g.json");
    fs::write(&garbage, "not json").unwrap();
    assert_eq!(giz(&["analyze", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(giz(&["analyze", "/nonexistent/input.json"]).status.code(), Some(2));
    let bad_rational = write(&dir, "r.json", &doc(&[("0", "1/ 2")], &[]));
    assert_eq!(giz(&["analyze", &bad_rational]).status.code(), Some(2));
    let dup = write(&dir, "d.json", &doc(&[("0", "-1"), ("0/1", "-2")], &[]));
    assert_eq!(giz(&["analyze", &dup]).status.code(), Some(2));
    let positive = write(&dir, "p.json", &doc(&[("0", "1")], &[("1", "1")]));
    assert_eq!(giz(&["analyze", &positive]).status.code(), Some(2));
    let two = write(&dir, "n.json", &doc(&[("0", "-1/2"), ("1", "-1/2")], &[]));
    assert_eq!(giz(&["analyze", &two]).status.code(), Some(3));
    assert_eq!(giz(&["classify", &two]).status.code(), Some(3));
    let toric = write(&dir, "t.json", &doc(&[("0", "-1/2")], &[("0", "1/3")]));
    assert_eq!(giz(&["extended", &toric]).status.code(), Some(4));
    assert_eq!(giz(&["rigidity", &toric]).status.code(), Some(4));
    assert_eq!(giz(&["classify", &toric]).status.code(), Some(0));
    assert_eq!(giz(&["toric", "4", "2"]).status.code(), Some(2));
    assert_eq!(giz(&["dg", "2", "3"]).status.code(), Some(2));
    assert_eq!(giz(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn toric_classes() {
    let out = stdout(&giz(&["toric", "5", "4"]));
    assert!(out.contains("classes: 1"), "{out}");
    let out = stdout(&giz(&["toric", "5", "2"]));
    assert_eq!(out, "zigzag [[0,0,-2,-3]]\nclasses: 2\n");
}

#[test]
fn dg_shape() {
    let out = stdout(&giz(&["dg", "2", "1"]));
    assert!(out.contains("zigzag [[0,0,-2,-2]]"));
    assert!(out.contains("F_1: bridge -1 box [] at C2"), "{out}");
    assert!(out.contains("F_0: bridge -1 box [] at C3"), "{out}");
    let out = stdout(&giz(&["dg", "4", "3"]));
    assert!(out.contains("F_1: bridge -3 box [] at C4"), "{out}");
    assert!(out.contains("F_0: bridge -1 box [] at C5"), "{out}");
}

#[test]
fn rigidity_of_a_generalizable_divisor() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e.json", &doc(&[("0", "1/4"), ("1", "-1")], &[("0", "-1/3")]));
    let out = stdout(&giz(&["rigidity", &f]));
    assert_eq!(out.lines().next(), Some("rigid: no; generalization: B_2 → D_0"));
    let f = write(&dir, "r.json", &doc(&[("0", "1/4"), ("1", "-1")], &[("0", "-1/4")]));
    let out = stdout(&giz(&["rigidity", &f]));
    assert_eq!(out.lines().next(), Some("rigid: yes"));
}

#[test]
fn extended_reversed_and_dot() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e.json", &doc(&[("0", "1/4"), ("1", "-1")], &[("0", "-1/3")]));
    let dot = dir.path().join("ext.dot");
    let o = giz(&["extended", &f, "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("zigzag [[0,0,-4,-2,-2,-2]]"));
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph {\n") && text.ends_with("}\n"));
    assert!(text.contains("C0(0)") && text.contains("B2(-2)"), "{text}");
    let out = stdout(&giz(&["extended", "--reversed", &f]));
    assert!(out.contains("zigzag [[0,0,-2,-2,-2,-4]]"), "{out}");
}

#[test]
fn classify_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c.json", &doc(&[("0", "-1/3"), ("1", "-1")], &[("1", "-1/3"), ("0", "-1")]));
    let o = giz(&["--json", "classify", &f]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["beta"], true);
    assert_eq!(v["cstar"], "unique");
    assert_eq!(v["fibration_classes"], "one");
    assert_eq!(v["psi"], "-t + 1");
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e.json", &doc(&[("0", "1/4"), ("1", "-1")], &[("0", "-1/3")]));
    for cmd in ["analyze", "extended", "rigidity", "classify"] {
        let a = giz(&[cmd, &f]);
        let b = giz(&[cmd, &f]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let j1 = giz(&["--json", cmd, &f]);
        let j2 = giz(&["--json", cmd, &f]);
        assert_eq!(j1.stdout, j2.stdout, "{cmd}");
    }
}

fn corpus_file(dir: &Path, i: usize, pair: &gizatullin::dpd::DpdPair) -> String {
    let terms = |d: &gizatullin::dpd::QDivisor| -> Vec<(String, String)> {
        d.iter().map(|(p, c)| (p.to_string(), c.to_string())).collect()
    };
    let v = json!({ "d_plus": terms(pair.d_plus()), "d_minus": terms(pair.d_minus()) });
    let p = dir.join(format!("pair{i}.json"));
    fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn analyze_accepts_generated_pairs() {
    let dir = TempDir::new().unwrap();
    let mut g = PairGenerator::new(99);
    for i in 0..40 {
        let f = corpus_file(dir.path(), i, &g.next_pair());
        let o = giz(&["--json", "analyze", &f]);
        assert!(o.status.success(), "{f}: {}", String::from_utf8_lossy(&o.stderr));
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["gizatullin"], true);
    }
}
