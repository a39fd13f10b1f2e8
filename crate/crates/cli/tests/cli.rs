use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn pcflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcflab")).args(args).output().expect("spawn pcflab")
}

fn json(args: &[&str]) -> Value {
    let out = pcflab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/plane/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn query_c5() {
    let v = json(&["query", "--graph6", "Dhc", "--mad", "--chi-odd"]);
    assert_eq!(v["mad"], "2");
    assert_eq!(v["chi_odd"], 5);
}

#[test]
fn query_family_values() {
    assert_eq!(json(&["query", "--family", "sk:6", "--mad"])["mad"], "20/7");
    assert_eq!(json(&["query", "--family", "ht:1", "--chi-pcf"])["chi_pcf"], 5);
}

#[test]
fn query_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pcflab"))
        .args(["query", "--stdin", "--chi-proper"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Dhc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["chi_proper"], 3);
}

#[test]
fn parse_errors_exit_nonzero() {
    let out = pcflab(&["query", "--graph6", "!!", "--mad"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
    assert!(!pcflab(&["query", "--family", "nope:3", "--mad"]).status.success());
    assert!(!pcflab(&["verify", "--theorem", "pcf-mad", "--c", "4", "--family", "sk:5"]).status.success());
}

#[test]
fn verify_odd4_exhaustive() {
    let v = json(&["verify", "--theorem", "odd4-mad", "--exhaustive", "7"]);
    assert!(v["summary"]["counterexamples"].as_array().unwrap().is_empty());
    assert!(v["summary"]["in_scope"].as_u64().unwrap() > 100);
}

#[test]
fn verify_pcf5_exhaustive_all_colorable() {
    let v = json(&["verify", "--theorem", "pcf-mad", "--c", "5", "--exhaustive", "7"]);
    for r in v["records"].as_array().unwrap() {
        if r["in_scope"] == true {
            assert_eq!(r["outcome"], "colorable", "{}", r["graph6"]);
            assert_eq!(r["witness_verified"], true);
        }
    }
}

#[test]
fn verify_odd_mad_on_sk6() {
    let v = json(&["verify", "--theorem", "odd-mad", "--c", "5", "--family", "sk:6", "--no-shortcut"]);
    let r = &v["records"][0];
    assert_eq!(r["outcome"], "not-colorable");
    assert!(r["exception"].is_object());
    assert_eq!(r["consistent"], true);
    assert_eq!(json(&["query", "--family", "sk:6", "--chi-odd"])["chi_odd"], 6);
}

#[test]
fn verify_plane_fixtures() {
    let v = json(&["verify", "--theorem", "planar-odd6", "--plane", &fixture("dodecahedron.pg"), "--plane", &fixture("c5.pg")]);
    assert_eq!(v["summary"]["in_scope"], 2);
    assert_eq!(v["summary"]["consistent"], 2);
}

#[test]
fn discharge_examples() {
    let v = json(&["discharge", "--family", "subdiv:reg5x2", "--rules", "pcf5", "--bound", "20/7"]);
    assert_eq!(v["all_vertices_equal"], "20/7");
    assert!(v["violations"].as_array().unwrap().is_empty());

    let v = json(&["discharge", "--plane", &fixture("dodecahedron.pg"), "--rules", "planar6", "--bound", "0"]);
    assert!(!v["violations"].as_array().unwrap().is_empty());
    assert!(!v["findings"].as_array().unwrap().is_empty());
    assert_eq!(v["total_initial"], "-12");

    let v = json(&["discharge", "--family", "sk:6", "--rules", "pcf5", "--bound", "20/7"]);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert_eq!(v["conserved"], true);
}

#[test]
fn discharge_kind_mismatch() {
    assert!(!pcflab(&["discharge", "--family", "sk:6", "--rules", "planar6"]).status.success());
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--theorem", "pcf-mad", "--c", "5", "--family", "rand:14:20/7:3", "--family", "subdiv:reg5x4:1"];
    let a = pcflab(&args);
    let b = pcflab(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_and_csv_files() {
    let dir = std::env::temp_dir().join(format!("pcflab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (out, csv) = (dir.join("r.json"), dir.join("r.csv"));
    let o = pcflab(&[
        "verify", "--theorem", "odd4-mad", "--family", "ht:2", "--out", out.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["records"][0]["outcome"], "not-colorable");
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_outputs() {
    let out = pcflab(&["gen", "--enumerate", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 1 + 2 + 6);
    let out = pcflab(&["gen", "--enumerate", "5", "--mad-max", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 1 + 2 + 4 + 8);
    let v = json(&["gen", "--family", "sk:4", "--json"]);
    assert!(v.is_object());
}
