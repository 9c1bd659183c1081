use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ramsey(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(args)
        .env("RAMSEY_OUT", out)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn certificates(dir: &Path, prefix: &str) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_str().unwrap().starts_with(prefix))
        .collect();
    v.sort();
    v
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn bounds_table_and_json() {
    let tmp = TempDir::new().unwrap();
    let o = ramsey(tmp.path(), &["bounds", "--r", "2", "--k", "3", "--l", "2", "--n", "90"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(">= 250"));

    let o = ramsey(tmp.path(), &["bounds", "--r", "3", "--k", "2", "--l", "1", "--n", "4", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["format"], 1);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["formula"] == "bierbrauer-p4" && e["kind"] == "exact" && e["value"] == "6"));
}

#[test]
fn bounds_rejects_full_overlap() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(code(&ramsey(tmp.path(), &["bounds", "--r", "2", "--k", "3", "--l", "3"])), 2);
}

#[test]
fn color_writes_verified_certificates() {
    let tmp = TempDir::new().unwrap();
    let o = ramsey(tmp.path(), &["color", "afl", "--r", "2", "--k", "2", "--l", "1", "--n", "4"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("colors: 2"));

    let o = ramsey(tmp.path(), &["color", "design", "--fixture", "sts9"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("host: 9 vertices, 36 edges"));
    assert!(stdout(&o).contains("colors: 4"));

    let certs = certificates(tmp.path(), "avoids-");
    assert_eq!(certs.len(), 2);
    for c in &certs {
        let text = fs::read_to_string(c).unwrap();
        assert!(text.contains("\"status\": \"verified\""));
        assert_eq!(code(&ramsey(tmp.path(), &["verify", c.to_str().unwrap()])), 0);
    }
    assert_eq!(certificates(tmp.path(), "trace-").len(), 2);
    let manifest: serde_json::Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["runs"].as_array().unwrap().len(), 2);
}

#[test]
fn color_precondition_failure_is_an_input_error() {
    let tmp = TempDir::new().unwrap();
    let g = write(tmp.path(), "g.json", r#"{"k":2,"vertices":6,"edges":[[0,1],[0,2],[0,3],[0,4],[0,5]]}"#);
    let o = ramsey(tmp.path(), &["color", "star-arb", "--input", g.to_str().unwrap(), "--r", "3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds r^2/2"));
    assert_eq!(code(&ramsey(tmp.path(), &["color", "nope"])), 2);
}

#[test]
fn composite_on_a_tight_host() {
    let tmp = TempDir::new().unwrap();
    let edges: Vec<String> = (0..8).map(|i| format!("[{},{},{}]", i, i + 1, i + 2)).collect();
    let g = write(tmp.path(), "h.json", &format!(r#"{{"k":3,"vertices":10,"edges":[{}]}}"#, edges.join(",")));
    let o = ramsey(tmp.path(), &["color", "composite", "--input", g.to_str().unwrap(), "--r", "2", "--l", "2", "--n-prime", "8"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn arrow_and_tamper() {
    let tmp = TempDir::new().unwrap();
    let k4 = write(tmp.path(), "k4.json", r#"{"k":2,"vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#);
    let o = ramsey(tmp.path(), &["arrow", "--host", k4.to_str().unwrap(), "--r", "2", "--target", "path:2,1,4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("decision: avoided"));
    let cert = certificates(tmp.path(), "avoids-").pop().unwrap();

    // recolor every edge 0: K4 contains P4
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    v["coloring"] = serde_json::json!([0, 0, 0, 0, 0, 0]);
    let bad = write(tmp.path(), "bad.json", &v.to_string());
    let o = ramsey(tmp.path(), &["verify", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness"));

    let text = fs::read_to_string(&cert).unwrap();
    let trunc = write(tmp.path(), "trunc.json", &text[..text.len() / 2]);
    assert_eq!(code(&ramsey(tmp.path(), &["verify", trunc.to_str().unwrap()])), 2);

    let k5 = write(
        tmp.path(),
        "k5.json",
        r#"{"k":2,"vertices":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let o = ramsey(tmp.path(), &["arrow", "--host", k5.to_str().unwrap(), "--r", "2", "--target", "path:2,1,4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("decision: arrows"));
    assert_eq!(certificates(tmp.path(), "arrows-").len(), 1);
}

#[test]
fn malformed_host_is_an_input_error() {
    let tmp = TempDir::new().unwrap();
    let h = write(tmp.path(), "h.json", r#"{"k":2,"vertices":2,"edges":[[0,5]]}"#);
    assert_eq!(code(&ramsey(tmp.path(), &["arrow", "--host", h.to_str().unwrap(), "--r", "2", "--target", "path:2,1,4"])), 2);
    let h = write(tmp.path(), "k2.json", r#"{"k":2,"vertices":2,"edges":[[0,1]]}"#);
    assert_eq!(code(&ramsey(tmp.path(), &["arrow", "--host", h.to_str().unwrap(), "--r", "2", "--target", "path:2,1"])), 2);
}

#[test]
fn exact_values() {
    let tmp = TempDir::new().unwrap();
    let o = ramsey(tmp.path(), &["exact", "size-ramsey", "--target", "path:2,1,4", "--r", "2", "--max-edges", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("value: 7"));
    let o = ramsey(tmp.path(), &["exact", "ramsey", "--target", "path:2,1,4", "--r", "3", "--max-n", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("value: 6"));
    for c in certificates(tmp.path(), "") {
        if c.file_name().unwrap() != "manifest.json" {
            assert_eq!(code(&ramsey(tmp.path(), &["verify", c.to_str().unwrap()])), 0, "{}", c.display());
        }
    }
}

#[test]
fn exhausted_budget_exits_3() {
    let tmp = TempDir::new().unwrap();
    let o = ramsey(
        tmp.path(),
        &["--node-budget", "5", "exact", "ramsey", "--target", "path:2,1,4", "--r", "3", "--max-n", "7"],
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn certificates_do_not_depend_on_threads() {
    let one = TempDir::new().unwrap();
    let eight = TempDir::new().unwrap();
    for (dir, t) in [(&one, "1"), (&eight, "8")] {
        let o = ramsey(dir.path(), &["--threads", t, "exact", "size-ramsey", "--target", "path:2,1,4", "--r", "2", "--max-edges", "7"]);
        assert_eq!(code(&o), 0);
    }
    let a = certificates(one.path(), "size_ramsey_exact-");
    let b = certificates(eight.path(), "size_ramsey_exact-");
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].file_name(), b[0].file_name());
    assert_eq!(fs::read(&a[0]).unwrap(), fs::read(&b[0]).unwrap());
}

#[test]
fn fixtures_listing() {
    let tmp = TempDir::new().unwrap();
    let o = ramsey(tmp.path(), &["fixtures"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("sts9: 9 points, 12 blocks of size 3, resolvable"));
}
