use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpcentre")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_centre_small() {
    let o = bin(&["verify-centre", "--p", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("S_n^BP = S_n^g: OK").count(), 3);
    assert!(out.contains("pivots [0, 1, 2]"));
}

#[test]
fn verify_centre_defaults() {
    let o = bin(&["verify-centre", "--p", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n_max"], 4);
    assert_eq!(v["verdict"], true);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn congruence_table_and_check() {
    let o = bin(&["congruences", "--p", "3", "--n", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1,-1/3 1/3"));
    let mu = scratch("mu_fail.json", r#"["0", "1"]"#);
    let o = bin(&["congruences", "--p", "3", "--n", "1", "--mu", mu.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn basis_expand_psi_q() {
    let seq = scratch("psi_q.json", r#"["1", "4", "16", "64"]"#);
    let o =
        bin(&["basis-expand", "--family", "phihat_g", "--p", "3", "--in", seq.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "0", "0"]));
}

#[test]
fn bp_commands() {
    let o = bin(&["bp-dn", "--p", "2", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["delta"], 3);
    let o = bin(&["bp-etaR", "--p", "3", "--weight", "4", "--monomial", "v1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("eta_R(v1) = v1 - 24*t1"));
}

#[test]
fn lattice_command() {
    let sys = scratch("sys.json", r#"{"p": 3, "rows": [["-1/3", "1/3"]]}"#);
    let member = scratch("member.json", r#"["2", "5"]"#);
    let o =
        bin(&["lattice", "--system", sys.to_str().unwrap(), "--member", member.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pivots"], serde_json::json!([0, 1]));
    assert_eq!(v["member"], true);
}

#[test]
fn usage_errors() {
    let o = bin(&["verify-centre", "--p", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a prime"));
    let o = bin(&["congruences", "--p", "5", "--n", "2", "--q", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("order"));
    let bad = scratch("bad.json", "[\"1\",\n  0.25]");
    let o = bin(&["basis-expand", "--family", "phi_ku", "--p", "3", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("element [1]"), "{}", stderr(&o));
    let broken = scratch("broken.json", "{\"p\": 3,\n \"rows\": [[\"1/3\"]");
    let o = bin(&["lattice", "--system", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn scan_and_progressions() {
    let o = bin(&["scan-stabilization", "--p", "3", "--n", "2", "--max-weight", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equal to the Adams lattice from W = 2"));
    let o = bin(&["ku-progressions", "--p", "3", "--n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
}
