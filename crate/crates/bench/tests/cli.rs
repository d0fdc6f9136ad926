//! Runs the `cufbench` binary end to end on small cases.

use std::fs;
use std::process::Command;

use cuf_iga_bench::{builtin, run_case};

fn cufbench() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cufbench"))
}

#[test]
fn list_and_show() {
    let out = cufbench().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), builtin::all().len());
    assert!(text.contains("table8-theta45"));

    let out = cufbench()
        .args(["show", "table6-ah2-quartic"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let spec = cuf_iga_bench::CaseSpec::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(spec, builtin::find("table6-ah2-quartic").unwrap());

    let out = cufbench().args(["show", "nope"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn run_writes_per_case_and_summary_files() {
    let dir = tempfile::tempdir().unwrap();
    let status = cufbench()
        .args([
            "run",
            "table1-quadratic-5",
            "--mesh",
            "3",
            "--tolerance-profile",
            "paper",
        ])
        .env("CUFBENCH_OUT", dir.path())
        .status()
        .unwrap();
    // a 3x3 mesh is far from the published 5x5 values
    assert_eq!(status.code(), Some(1));
    for f in [
        "table1-quadratic-5.csv",
        "table1-quadratic-5.md",
        "summary.csv",
        "summary.md",
        "report.md",
    ] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let leftovers: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .filter(|e| {
            e.as_ref()
                .unwrap()
                .path()
                .extension()
                .is_some_and(|x| x == "tmp")
        })
        .collect();
    assert!(leftovers.is_empty());
    let csv = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert!(csv
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("table1,table1-quadratic-5,"));
}

#[test]
fn csv_bytes_are_reproducible() {
    let run = |dir: &std::path::Path| {
        let status = cufbench()
            .args(["run", "table4-quadratic-5", "--format", "csv", "--out"])
            .arg(dir)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        fs::read(dir.join("summary.csv")).unwrap()
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert_eq!(run(a.path()), run(b.path()));
    assert!(!a.path().join("summary.md").exists());
}

#[test]
fn json_case_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = builtin::find("table2-ah10-quadratic").unwrap();
    spec.name = "from-file".into();
    spec.mesh = 3;
    let file = dir.path().join("case.json");
    fs::write(&file, spec.to_json()).unwrap();
    let out = cufbench()
        .arg("run")
        .arg(&file)
        .args([
            "--no-stabilization",
            "--degree",
            "3",
            "--format",
            "md",
            "--out",
        ])
        .arg(dir.path().join("res"))
        .output()
        .unwrap();
    assert!(out.status.code().is_some());
    let md = fs::read_to_string(dir.path().join("res").join("from-file.md")).unwrap();
    spec.degree = 3;
    spec.stabilization.enabled = false;
    let direct = run_case(&spec).unwrap();
    let w = format!("{:.4}", direct.output("w").unwrap());
    assert!(md.contains(&w), "{md}");
}

#[test]
fn bad_input_is_reported() {
    let out = cufbench().args(["run", "table9"]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("table9"));
    let out = cufbench()
        .args(["run", "table1-cubic-5", "--alpha", "0.5"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha"));
}
