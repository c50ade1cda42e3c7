use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdkernel"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

const P5: &str = "p graph 5 1 2\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n";

#[test]
fn solve_prints_value_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p5.txt"), P5).unwrap();
    let text = stdout(&run(dir.path(), &["solve", "is", "--in", "p5.txt", "--engine", "both"]));
    assert!(text.contains("value 3\n") && text.contains("answer yes"), "{text}");
    let text = stdout(&run(dir.path(), &["solve", "ds", "--in", "p5.txt"]));
    assert!(text.contains("value 2\n"), "{text}");
}

#[test]
fn kernelize_is_deterministic_and_equivalent() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p5.txt"), P5).unwrap();
    let args = ["kernelize", "--in", "p5.txt", "--out", "a.txt", "--report", "a.json"];
    stdout(&run(dir.path(), &args));
    let args = ["kernelize", "--in", "p5.txt", "--out", "b.txt", "--report", "b.json"];
    stdout(&run(dir.path(), &args));
    let read = |f: &str| fs::read(dir.path().join(f)).unwrap();
    assert_eq!(read("a.txt"), read("b.txt"));
    assert_eq!(read("a.json"), read("b.json"));
    let report: serde_json::Value = serde_json::from_slice(&read("a.json")).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["component_bound_holds"], true);
    let args = ["verify", "equivalence", "--before", "p5.txt", "--after", "a.txt", "--oracle", "is"];
    assert!(stdout(&run(dir.path(), &args)).contains("equivalent"));
}

#[test]
fn generators_write_valid_certificates() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("f.cnf"), "p cnf 2 1\n1 -2 2 0\n").unwrap();
    fs::write(dir.path().join("p5.txt"), P5).unwrap();
    let cases: [&[&str]; 4] = [
        &["gen", "lowerbound", "--t", "2", "--out", "g.txt", "--certs", "g.json"],
        &["gen", "crosscompose", "--cnf", "f.cnf", "--cnf", "f.cnf", "--out", "g.txt", "--certs", "g.json"],
        &["gen", "vcds", "--in", "p5.txt", "--out", "g.txt", "--certs", "g.json"],
        &["gen", "logtd", "--u", "1", "--w", "1", "--edge", "0,0", "--k", "1", "--out", "g.txt", "--certs", "g.json"],
    ];
    for args in cases {
        stdout(&run(dir.path(), args));
        let text = stdout(&run(dir.path(), &["verify", "certificates", "--in", "g.txt", "--certs", "g.json"]));
        assert!(text.contains("valid"), "{args:?}: {text}");
    }
}

#[test]
fn errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "p graph 2 1 1\ne 0 5\n").unwrap();
    let out = run(dir.path(), &["solve", "is", "--in", "bad.txt"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(dir.path(), &["solve", "is", "--in", "missing.txt"]);
    assert!(!out.status.success());
}

#[test]
fn td_compute_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p5.txt"), P5).unwrap();
    let text = stdout(&run(dir.path(), &["td", "compute", "--in", "p5.txt"]));
    assert!(text.starts_with("td 3\n"));
    fs::write(dir.path().join("d.txt"), &text).unwrap();
    stdout(&run(dir.path(), &["td", "verify", "--in", "p5.txt", "--decomposition", "d.txt"]));
    fs::write(dir.path().join("bad.txt"), "t 0 -\nt 1 0\nt 2 0\nt 3 0\nt 4 0\n").unwrap();
    let out = run(dir.path(), &["td", "verify", "--in", "p5.txt", "--decomposition", "bad.txt"]);
    assert!(!out.status.success());
}
