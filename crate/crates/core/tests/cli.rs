use std::process::{Command, Output};

use equicoh::designs::{DesignFile, DesignKind};

fn equicoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_writes_design_files() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, d, count, provenance) in [
        ("sic", "3", 9, "Hesse"),
        ("sic", "8", 64, "Hoggar"),
        ("mub", "2", 6, "PauliEigenbases"),
        ("mub", "8", 72, "Gf8Lines"),
    ] {
        let path = dir.path().join(format!("{kind}{d}.json"));
        let out = equicoh(&["build", kind, "--dimension", d, "--output", path.to_str().unwrap()]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let file = DesignFile::read(&path).unwrap();
        assert_eq!(file.vectors.len(), count);
        assert_eq!(file.provenance, provenance);
        match file.kind {
            DesignKind::Sic => assert!(file.to_sic().is_ok()),
            DesignKind::Mub => assert_eq!(file.to_mub().unwrap().len(), file.dim + 1),
        }
    }
}

#[test]
fn build_records_seed_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = equicoh(&["build", "mub", "-d", "8", "-o", p.to_str().unwrap(), "--seed", "11"]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(DesignFile::read(&a).unwrap().seed, Some(11));
}

#[test]
fn build_rejects_unsupported_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let out = equicoh(&["build", "sic", "-d", "5", "-o", dir.path().join("x").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_hoggar_profiles_json() {
    let out = equicoh(&["verify", "--dimension", "8", "--check", "hoggar-profiles", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!(r["check"], "hoggar-profiles");
    assert_eq!(r["passed"], true);
    assert_eq!(r["details"]["counts_per_state"]["A"], 2);
    assert_eq!(r["details"]["counts_per_state"]["B"], 7);
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["check", "details", "dimension", "max_abs_error", "passed", "tolerance"]);
}

#[test]
fn verify_everything_passes() {
    let out = equicoh(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(records.len() >= 11);
    assert!(records.iter().all(|r| r["passed"] == true));
}

#[test]
fn impossible_tolerance_fails() {
    let out = equicoh(&["verify", "--dimension", "3", "--tolerance", "1e-20"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn csv_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = equicoh(&["verify", "--check", "sic-overlaps", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "check,dimension,passed,max_abs_error,tolerance,details");
    assert_eq!(lines.len(), 4);
    assert!(lines[3].starts_with("sic-overlaps,8,true,"));
}

#[test]
fn verify_rejects_bad_arguments() {
    assert_eq!(equicoh(&["verify", "--check", "nonsense"]).status.code(), Some(2));
    assert_eq!(equicoh(&["verify", "--dimension", "4"]).status.code(), Some(2));
    assert_eq!(equicoh(&["verify", "--tolerance", "-1"]).status.code(), Some(2));
}

fn probe_value(args: &[&str]) -> f64 {
    let out = equicoh(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    first.split(" = ").nth(1).unwrap().parse().unwrap()
}

#[test]
fn probe_examples() {
    let v = probe_value(&["probe", "--state", "sic:8:0", "--basis", "mub:8:0", "--measure", "sq-offdiag"]);
    assert!((v - 7.0 / 9.0).abs() < 1e-10);
    for m in ["sq-offdiag", "l1", "rel-ent", "renyi2"] {
        let v = probe_value(&["probe", "--state", "bloch:0,0,1", "--basis", "mub:2:0", "--measure", m]);
        assert!(v.abs() < 1e-12, "{m}");
    }
    let v = probe_value(&["probe", "--state", "sic:3:0", "--basis", "mub:3:2", "--measure", "rel-ent"]);
    assert!((v - std::f64::consts::LN_2).abs() < 1e-10);
}

#[test]
fn probe_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let amps = dir.path().join("amps.json");
    std::fs::write(&amps, "[[1.0, 0.0], [1.0, 0.0]]").unwrap();
    let spec = format!("file:{}", amps.display());
    let v = probe_value(&["probe", "--state", &spec, "--basis", "computational:2", "--measure", "l1"]);
    assert!((v - 1.0).abs() < 1e-12);

    let sic = dir.path().join("sic.json");
    let mub = dir.path().join("mub.json");
    assert!(equicoh(&["build", "sic", "-d", "8", "-o", sic.to_str().unwrap()]).status.success());
    assert!(equicoh(&["build", "mub", "-d", "8", "-o", mub.to_str().unwrap()]).status.success());
    let v = probe_value(&[
        "probe",
        "--state",
        &format!("design:{}:5", sic.display()),
        "--basis",
        &format!("design:{}:4", mub.display()),
        "--measure",
        "renyi2",
    ]);
    assert!((v + (2.0f64 / 9.0).ln()).abs() < 1e-10);
}

#[test]
fn probe_errors_exit_two() {
    let out = equicoh(&["probe", "--state", "sic:3:0", "--basis", "mub:2:0", "--measure", "l1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = equicoh(&["probe", "--state", "bloch:1,1", "--basis", "mub:2:0", "--measure", "l1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = equicoh(&["probe", "--state", "bloch:0,0,1", "--basis", "mub:2:0", "--measure", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
