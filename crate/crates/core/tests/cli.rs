use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn fixture(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.txt"));
    let o = leibniz(&["catalog", name, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    path
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn catalog_prints_the_text_format() {
    let o = leibniz(&["catalog", "c3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "algebra C3\narity 3\ndim 3\nfield rational\nbracket 2 1 1 : 1 e2\nbracket 3 1 1 : 1 e3\nend\n"
    );
}

#[test]
fn check_passes_on_the_diagonal_fixture() {
    let dir = TempDir::new().unwrap();
    let d3 = fixture(dir.path(), "d3");
    let o = leibniz(&["check", d3.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed (1024 cases)"), "{}", stdout(&o));
}

#[test]
fn verify_and_regular_on_the_cartan_fixture() {
    let dir = TempDir::new().unwrap();
    let c3 = fixture(dir.path(), "c3");
    let c3 = c3.to_str().unwrap();
    let o = leibniz(&["verify", c3, "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));

    let o = leibniz(&["--json", "regular", c3, "--seed", "7", "--trials", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["rank_upper_bound"], 1);
    assert_eq!(json["best_tuple"], serde_json::json!(["e1", "e1"]));
    assert_eq!(json["seed"], 7);
}

#[test]
fn cartan_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c3 = fixture(dir.path(), "c3");
    let c3 = c3.to_str().unwrap();
    let yes = leibniz(&["cartan", c3, "--subspace", "e1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("cartan: true"));
    let no = leibniz(&["cartan", c3, "--subspace", "e2"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("cartan: false"));
    let bad = leibniz(&["cartan", c3, "--subspace", "e4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn skew_fails_on_a_non_antisymmetric_algebra() {
    let dir = TempDir::new().unwrap();
    let c3 = fixture(dir.path(), "c3");
    let o = leibniz(&["skew", c3.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED"));
}

#[test]
fn series_reports_stabilization() {
    let dir = TempDir::new().unwrap();
    let c3 = fixture(dir.path(), "c3");
    let o = leibniz(&["--json", "series", c3.to_str().unwrap(), "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(json.to_string().contains("\"stabilized\":true"), "{json}");
}

#[test]
fn malformed_input_exits_with_usage_code() {
    let dir = TempDir::new().unwrap();
    let syntax = write(
        dir.path(),
        "syntax.txt",
        "algebra X\narity 2\ndim 2\nfield rational\nbracket 1 1 : 1 q1\nend\n",
    );
    let o = leibniz(&["check", syntax.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5, column 17"), "{}", stderr(&o));

    let arity = write(
        dir.path(),
        "arity.txt",
        "algebra X\narity 3\ndim 2\nfield rational\nbracket 1 1 : 1 e1\nend\n",
    );
    let o = leibniz(&["check", arity.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 3"));

    let o = leibniz(&["check", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = leibniz(&["bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quotient_writes_a_loadable_file() {
    let dir = TempDir::new().unwrap();
    let c3 = fixture(dir.path(), "c3");
    let out = dir.path().join("q.txt");
    let o = leibniz(&[
        "quotient",
        c3.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = leibniz(&["check", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = leibniz(&["skew", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}
