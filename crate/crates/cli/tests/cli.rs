use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn zeeman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeeman")).args(args).output().unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = zeeman(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn hollow_triangle_is_cm() {
    let (code, out, _) = run(&["cm-check", "--field", "q", &path("hollow-triangle.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("Cohen-Macaulay over q: yes"));
}

#[test]
fn rp2_over_f2_reports_a_witness() {
    let (code, out, _) = run(&["cm-check", "--field", "p:2", "--format", "json", &path("rp2.txt")]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["label"], "{}");
    assert_eq!(v["witness"]["degree"], 2);
}

#[test]
fn bowtie_page_one_leaves_the_top_column() {
    let (code, out, _) = run(&["zeeman", "--page", "1", "--format", "json", &path("bowtie.txt")]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    let off = v["concentration"]["offending"].as_array().unwrap();
    assert_eq!(off.len(), 1);
    assert_eq!(off[0], serde_json::json!([2, -1, 1]));
}

#[test]
fn irres_refuses_the_bowtie() {
    let (code, out, _) = run(&["irres", &path("bowtie.txt")]);
    assert_eq!(code, 1);
    assert!(out.contains("H^2_{3}"), "{out}");
}

#[test]
fn malformed_input_points_at_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "simplicial\nvertices 3\nfacet 1 2\nfacet 1 x\n").unwrap();
    let (code, out, err) = run(&["cm-check", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("bad.txt:4:"), "{err}");
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(run(&["cm-check", "--field", "p:4", &path("rp2.txt")]).0, 2);
    assert_eq!(run(&["zeeman", "--degree", "1,2", &path("rp2.txt")]).0, 2);
    assert_eq!(run(&["betti", &path("square-cone.txt")]).0, 2);
}

#[test]
fn resolutions_round_trip_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    for (input, field) in [("rp2.txt", "p:3"), ("square-cone-pair.txt", "q"), ("hollow-triangle.txt", "p:2")] {
        let (code, out, _) = run(&["irres", "--field", field, "--format", "json", &path(input)]);
        assert_eq!(code, 0, "{input}");
        let saved = dir.path().join(format!("{input}.json"));
        std::fs::write(&saved, &out).unwrap();
        let (code, out, _) = run(&["validate", "--resolution", saved.to_str().unwrap(), &path(input)]);
        assert_eq!(code, 0, "{input}: {out}");
        assert!(out.contains("resolution exact"));
    }
}

#[test]
fn tampered_resolution_fails_validation() {
    let (_, out, _) = run(&["irres", "--format", "json", &path("hollow-triangle.txt")]);
    let mut v: Value = serde_json::from_str(&out).unwrap();
    v["resolution"]["maps"][0][0][0] = Value::String("5".into());
    let dir = tempfile::tempdir().unwrap();
    let saved = dir.path().join("res.json");
    std::fs::write(&saved, v.to_string()).unwrap();
    let (code, out, _) = run(&["validate", "--resolution", saved.to_str().unwrap(), &path("hollow-triangle.txt")]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["total-irres", "--format", "json"],
        vec!["zeeman", "--page", "inf"],
        vec!["betti", "--field", "p:2"],
    ] {
        let mut a = args.clone();
        let p = path("rp2.txt");
        a.push(&p);
        let first = zeeman(&a).stdout;
        let second = Command::new(env!("CARGO_BIN_EXE_zeeman")).args(&a).env("ZEEMAN_THREADS", "1").output().unwrap().stdout;
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn betti_and_dual_agree_on_the_triangle() {
    let (code, out, _) = run(&["betti", "--format", "json", &path("hollow-triangle.txt")]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matches_dual"], true);
    assert_eq!(v["betti"]["entries"].as_array().unwrap().len(), 7);
    let (code, out, _) = run(&["dual", &path("hollow-triangle.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("F_2 = S(-{1,2,3})"));
}

#[test]
fn rp2_betti_table_over_f2_is_not_linear() {
    assert_eq!(run(&["betti", "--field", "p:2", &path("rp2.txt")]).0, 1);
    assert_eq!(run(&["betti", "--field", "p:3", &path("rp2.txt")]).0, 0);
}

#[test]
fn hilbert_and_total_resolution() {
    assert_eq!(run(&["hilbert", &path("bowtie.txt")]).0, 0);
    let (code, out, _) = run(&["total-irres", &path("hollow-triangle.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("not a complete minimality certificate"));
}

#[test]
fn polyhedral_graded_degrees_need_coordinates() {
    let (code, _, err) = run(&["zeeman", "--degree", "1,0", &path("quadrant.txt")]);
    assert_eq!(code, 2);
    assert!(err.contains("semigroup"), "{err}");
    assert_eq!(run(&["validate", &path("quadrant.txt")]).0, 0);
}
