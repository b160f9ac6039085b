use std::path::PathBuf;
use std::process::{Command, Output};

fn schurcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurcat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("schurcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn schur_dim_prints_binomial() {
    let o = schurcat(&["schur-dim", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "10");
    let o = schurcat(&["schur-dim", "--n", "3", "--d", "2"]);
    assert_eq!(stdout(&o).trim(), "45");
}

#[test]
fn relation_family_passes() {
    let o = schurcat(&["check-relations", "2", "1", "--family=EF"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(schurcat(&["eval-diagram", "no-such-file.txt"]).status.code(), Some(2));
    assert_eq!(schurcat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(schurcat(&["schur-dim", "1", "2"]).status.code(), Some(2));
    assert_eq!(schurcat(&["soergel-check", "2", "3"]).status.code(), Some(2));
    assert_eq!(schurcat(&["super-schur", "1", "1", "1,2"]).status.code(), Some(2));
    assert_eq!(schurcat(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_reports_are_reproducible() {
    let (a, b) = (tmp("a.json"), tmp("b.json"));
    for p in [&a, &b] {
        let o = schurcat(&["check-relations", "2", "2", "--seed", "7", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["failed"], 0);
}

#[test]
fn super_schur_prints_polynomial() {
    let o = schurcat(&["super-schur", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("x1") && s.contains("y1"), "{s}");
    let o = schurcat(&["super-schur", "1", "1", "2,2"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn eval_diagram_files() {
    let p = tmp("barbell.txt");
    std::fs::write(&p, "n=3, d=3, source=\nstartdot(1)\nenddot(1)\n").unwrap();
    let o = schurcat(&["eval-diagram", "--soergel", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("degree 2"));
    let q = tmp("cup.txt");
    std::fs::write(&q, "n=2, d=2, lambda=(1,1)\ncupEF(1)\n").unwrap();
    let j = tmp("cup.json");
    let o = schurcat(&["eval-diagram", q.to_str().unwrap(), "--json", j.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&j).unwrap()).unwrap();
    assert_eq!(v["degree"], 1);
    let bad = tmp("bad.txt");
    std::fs::write(&bad, "not a diagram\n").unwrap();
    assert_eq!(schurcat(&["eval-diagram", bad.to_str().unwrap()]).status.code(), Some(2));
}
