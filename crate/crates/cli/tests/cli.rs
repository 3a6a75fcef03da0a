use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn hilb2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilb2")).args(args).env_remove("HILB2_SEED").output().expect("binary runs")
}

fn inputs(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", "inputs", name].iter().collect();
    p.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_paper_passes() {
    let o = hilb2(&["verify-paper"]);
    assert!(o.status.success(), "{}\n{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn poset_dot_has_six_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p.dot");
    let o = hilb2(&[
        "poset",
        "--grading",
        &inputs("standard.json"),
        "--hilbert",
        &inputs("h_1221.json"),
        "--dot",
        dot.to_str().unwrap(),
        "--verify",
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&dot).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 6);
    assert_eq!(text.lines().filter(|l| l.contains("->")).count(), 8);
    assert!(text.is_ascii());
}

#[test]
fn factor_report() {
    let o = hilb2(&["factor", "--grading", &inputs("z_1_-1.json"), "--ideal", r#"{"gens":[[4,3],[3,4],[2,5]]}"#]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "X = A^2, Q = <x^2,x*y,y^2>\n");
}

#[test]
fn ideal_stands_in_for_the_hilbert_function() {
    let o =
        hilb2(&["enumerate", "--json", "--grading", &inputs("z3.json"), "--ideal", r#"{"gens":[[5,0],[1,1],[0,2]]}"#]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<(u64, u64)> = v["hilbert"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["degree"]["torsion"][0].as_u64().unwrap(), e["value"].as_u64().unwrap()))
        .collect();
    assert_eq!(values, [(0, 2), (1, 3), (2, 1)]);
    assert_eq!(v["ideals"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_input_exits_with_two() {
    let bad_residue =
        r#"{"free_rank":0,"torsion":[3],"deg_x":{"free":[],"torsion":[5]},"deg_y":{"free":[],"torsion":[1]}}"#;
    let o = hilb2(&["arrows", "--grading", bad_residue, "--ideal", r#"{"gens":[[1,0],[0,1]]}"#]);
    assert_eq!(o.status.code(), Some(2));
    let o = hilb2(&["arrows", "--ideal", "{\"gens\":\n[[1,0],"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = hilb2(&["edge", "--ideal", &inputs("small.json"), "--alpha", "0,0,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hilb2(&["tangent", "--ideal", &inputs("small.json"), "--t", "1/0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hilb2(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failed_check_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("wrong.json"),
        r#"{"kind":"poset","name":"wrong count","grading":{"free_rank":0,"torsion":[],"deg_x":{"free":[],"torsion":[]},"deg_y":{"free":[],"torsion":[]}},
            "hilbert":[{"degree":{"free":[],"torsion":[]},"value":4}],"expect":{"count":4}}"#,
    )
    .unwrap();
    let o = hilb2(&["verify-paper", "--corpus-only", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL wrong count"));
}

#[test]
fn chart_output_is_deterministic() {
    let args =
        ["chart", "--json", "--verify", "--grading", &inputs("standard.json"), "--hilbert", &inputs("h_1221.json")];
    let run =
        |seed: &str| Command::new(env!("CARGO_BIN_EXE_hilb2")).args(args).env("HILB2_SEED", seed).output().unwrap();
    let (a, b, c) = (run("7"), run("7"), run("8"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["report"]["seed"], 7);
    assert_eq!(v["chart"]["d"], v["report"]["d"]);
}

#[test]
fn output_file_and_chain() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("chain.txt");
    let o = hilb2(&["chain", "--verify", "--ideal", r#"{"gens":[[3,0],[0,1]]}"#, "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(out).unwrap();
    assert!(text.starts_with("<x^3,y>\n"));
    assert!(text.contains("<x,y^3>"));
    assert!(!text.contains("FAILED"));
}
