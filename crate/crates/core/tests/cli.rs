use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn diversekit(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diversekit")).args(args).arg(input).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

#[test]
fn exit_codes_follow_the_answer() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.gr", C5);
    let yes = diversekit(&["--problem", "vc", "--k", "3", "--r", "2", "--d", "4"], &c5);
    assert_eq!(yes.status.code(), Some(0));
    let report = json(&yes);
    assert_eq!(report["answer"], "yes");
    assert!(report["diversity"].as_u64().unwrap() >= 4);
    assert_eq!(report["tables"]["mode"], "framework");

    let no = diversekit(&["--problem", "vc", "--k", "2", "--r", "1"], &c5);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(json(&no)["answer"], "no");

    let missing = diversekit(&["--problem", "vc", "--k", "2"], &dir.path().join("absent.gr"));
    assert_eq!(missing.status.code(), Some(2));
    assert!(missing.stdout.is_empty());
    assert!(!missing.stderr.is_empty());
}

#[test]
fn solver_modes_give_the_same_answers() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.gr", C5);
    for d in 0..=10 {
        let d = d.to_string();
        let codes: Vec<Option<i32>> = ["auto", "direct", "framework", "oracle"]
            .iter()
            .map(|mode| diversekit(&["--problem", "vc", "--k", "3", "--r", "3", "--d", &d, "--mode", mode], &c5).status.code())
            .collect();
        assert!(codes.iter().all(|c| *c == codes[0]), "d={d}: {codes:?}");
    }
}

#[test]
fn user_decomposition_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.gr", C5);
    let td = write(dir.path(), "c5.td", "s td 3 3 5\nb 1 1 2 5\nb 2 2 3 5\nb 3 3 4 5\n1 2\n2 3\n");
    let trace = dir.path().join("trace.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_diversekit"))
        .args(["--problem", "vc", "--k", "3", "--r", "2", "--d", "2", "--td"])
        .arg(&td)
        .arg("--trace")
        .arg(&trace)
        .arg(&c5)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["tables"]["width"], 2);
    let csv = std::fs::read_to_string(&trace).unwrap();
    assert!(csv.starts_with("node,delta,states,tuples\n"));
    assert_eq!(csv.lines().count() as u64, json(&out)["tables"]["nodes"].as_u64().unwrap() + 1);

    let wrong = write(dir.path(), "wrong.td", "s td 1 2 5\nb 1 1 2\n");
    let out = Command::new(env!("CARGO_BIN_EXE_diversekit"))
        .args(["--problem", "vc", "--k", "3", "--td"])
        .arg(&wrong)
        .arg(&c5)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn threads_do_not_change_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.gr", C5);
    let one = diversekit(&["--problem", "vc", "--k", "4", "--r", "3", "--d", "10"], &c5);
    let two = diversekit(&["--problem", "vc", "--k", "4", "--r", "3", "--d", "10", "--threads", "2"], &c5);
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn kernelized_runs_report_the_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let hs = write(dir.path(), "h.hgr", "p hs 5 4 2\nh 1\nh 1 2\nh 3 4\nh 4 5\n");
    let out = diversekit(&["--problem", "hs", "--k", "3", "--r", "2", "--d", "2", "--kernelize"], &hs);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["kernel"]["verdict"], "reduced");
    assert_eq!(report["kernel"]["forced"], serde_json::json!([0]));
    for s in report["solutions"].as_array().unwrap() {
        assert!(s.as_array().unwrap().contains(&Value::from(0)));
    }

    let tour = write(dir.path(), "t.tour", "p tour 3\na 1 2\na 2 3\na 3 1\n");
    let out = diversekit(&["--problem", "fast", "--k", "0", "--kernelize"], &tour);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["kernel"]["verdict"], "no");
}

#[test]
fn tree_modes_are_vertex_cover_only() {
    let dir = tempfile::tempdir().unwrap();
    let pts = write(dir.path(), "p.pts", "0 0\n1 1\n2 2\n");
    for mode in ["direct", "framework"] {
        let out = diversekit(&["--problem", "plc", "--k", "1", "--mode", mode], &pts);
        assert_eq!(out.status.code(), Some(2));
    }
    assert_eq!(diversekit(&["--problem", "plc", "--k", "1"], &pts).status.code(), Some(0));
}
