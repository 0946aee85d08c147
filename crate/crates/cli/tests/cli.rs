use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;
use predicates::prelude::*;
use tempfile::TempDir;

fn sfw() -> Command {
    let mut c = Command::cargo_bin("sfw").unwrap();
    for var in ["SFW_ORDER_CAP", "SFW_AUT_CAP", "SFW_ORACLE_CAP", "SFW_CONFIG", "SFW_TOL_SPECTRUM"] {
        c.env_remove(var);
    }
    c
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s3_files(dir: &TempDir) -> (PathBuf, PathBuf) {
    (
        write(dir, "s3.json", r#"{"degree": 3, "generators_cycles": ["(0 1)", "(0 1 2)"]}"#),
        write(dir, "s2.json", r#"{"degree": 3, "generators": [[1, 0, 2]]}"#),
    )
}

#[test]
fn index_of_a_transposition_subgroup() {
    let dir = TempDir::new().unwrap();
    let (g, h) = s3_files(&dir);
    sfw().arg("index").arg("--group").arg(&g).arg("--subgroup").arg(&h).assert().success().stdout("index 3, double_cosets 2\n");
    sfw().arg("index").arg("--group").arg(&g).arg("--subgroup").arg(&g).assert().success().stdout("index 1, double_cosets 1\n");
}

#[test]
fn malformed_generator_is_a_parse_error_with_position() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\n  \"degree\": 3,\n  \"generators_cycles\": [\"(0 x)\"]\n}\n");
    sfw()
        .args(["index", "--subgroup", "S3", "--group"])
        .arg(&bad)
        .assert()
        .code(2)
        .stderr(predicate::str::contains("line 3").and(predicate::str::contains("position 3")));
    let broken = write(&dir, "broken.json", "{\"degree\": 3,");
    sfw().args(["chartab", "--group"]).arg(&broken).assert().code(2);
}

#[test]
fn non_subgroup_is_a_precondition_failure() {
    let dir = TempDir::new().unwrap();
    let (g, h) = s3_files(&dir);
    sfw().arg("index").arg("--group").arg(&h).arg("--subgroup").arg(&g).assert().code(3);
}

#[test]
fn spectrum_queries() {
    sfw().args(["spectrum", "2"]).assert().success().stdout(predicate::str::starts_with("discrete n=4"));
    sfw().args(["spectrum", "3.5"]).assert().success().stdout(predicate::str::starts_with("not-in-spectrum"));
    sfw().args(["spectrum", "4.7"]).assert().success().stdout("continuous\n");
    let out = sfw().args(["spectrum", "1", "--json"]).assert().success().get_output().stdout.clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["kind"], "discrete");
    assert_eq!(v["n"], 3);
}

#[test]
fn verify_suites() {
    sfw().args(["verify", "theta"]).assert().success().stdout(predicate::str::contains("0 failures"));
    let out = sfw().args(["verify", "all", "--json"]).assert().success().get_output().stdout.clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["wall_time_secs"].as_f64().unwrap() < 60.0);
    sfw().args(["verify", "everything"]).assert().code(2);
}

#[test]
fn corrupted_corpus_file_is_named() {
    let dir = TempDir::new().unwrap();
    write(
        &dir,
        "a_good.json",
        r#"{"name": "S3>A3", "group": {"degree": 3, "generators_cycles": ["(0 1)", "(0 1 2)"]},
            "subgroup": {"degree": 3, "generators_cycles": ["(0 1 2)"]}}"#,
    );
    write(&dir, "b_corrupt.json", r#"{"name": "oops", "group": {"degree": 3, "generators_cycles": ["(0 1"#);
    sfw()
        .args(["verify", "theta", "--corpus"])
        .arg(dir.path())
        .assert()
        .code(1)
        .stdout(predicate::str::contains("b_corrupt.json"));
}

#[test]
fn principal_graph_dot_and_json() {
    let dir = TempDir::new().unwrap();
    let (g, h) = s3_files(&dir);
    let out = sfw().arg("graph").arg("--principal").arg("--group").arg(&g).arg("--subgroup").arg(&h).assert().success().get_output().stdout.clone();
    let dot = String::from_utf8(out).unwrap();
    assert!(dot.starts_with("graph principal {"));
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert_eq!(dot.matches("label=\"").count(), 5);

    let out = sfw().arg("graph").arg("--dual").args(["--format", "json"]).arg("--group").arg(&g).arg("--subgroup").arg(&h).assert().success().get_output().stdout.clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    assert!((v["norm_squared"].as_f64().unwrap() - 3.0).abs() < 1e-6);
}

#[test]
fn output_is_deterministic_and_out_writes_a_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("graph.json");
    let run = || {
        sfw().args(["graph", "--json", "--group", "S4", "--subgroup", "D4", "--out"]).arg(&target).assert().success().stdout("");
        fs::read(&target).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn extension_of_a4() {
    let out = sfw().args(["extend", "--group", "A4", "--out-subgroup", "1"]).assert().success().get_output().stdout.clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["order"], 24);
    assert_eq!(v["index"], 2);
    assert_eq!(v["fingerprint"]["4"], 6);
    assert_eq!(v["cocycle"]["quotient_order"], 2);
    sfw().args(["extend", "--group", "A4", "--out-subgroup", "7"]).assert().code(3);
    sfw().args(["extend", "--group", "A4", "--out-subgroup", "x"]).assert().code(2);
}

#[test]
fn caps_from_environment_and_flags() {
    sfw().args(["extend", "--group", "A4"]).env("SFW_AUT_CAP", "5").assert().code(4);
    sfw().args(["extend", "--group", "A4", "--aut-cap", "5"]).assert().code(4);
    sfw().args(["chartab", "--group", "S4"]).env("SFW_ORDER_CAP", "10").assert().code(4);
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "cfg.json", r#"{"order_cap": 10}"#);
    sfw().args(["chartab", "--group", "S4", "--config"]).arg(&cfg).assert().code(4);
    // Flags override the file.
    sfw().args(["chartab", "--group", "S4", "--order-cap", "100", "--config"]).arg(&cfg).assert().success();
    sfw().args(["spectrum", "2", "--order-cap", "0"]).assert().code(3);
}

#[test]
fn character_table_json() {
    let out = sfw().args(["chartab", "--group", "S3", "--json"]).assert().success().get_output().stdout.clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 2]));
}

#[test]
fn virtual_index_files() {
    let dir = TempDir::new().unwrap();
    let ok = write(&dir, "v.json", r#"{"t": 3, "parts": [{"s": 1, "index_g_k": 1, "index_h_gamma_k": 2}, {"s": 1, "index_g_k": 2, "index_h_gamma_k": 3}]}"#);
    sfw().args(["vindex", "--spec"]).arg(&ok).assert().success().stdout("virtual index 15\n");
    let bad = write(&dir, "w.json", r#"{"t": 3, "parts": [{"s": 1, "index_g_k": 2, "index_h_gamma_k": 5}]}"#);
    sfw().args(["vindex", "--spec"]).arg(&bad).assert().code(3);
}

#[test]
fn induced_homomorphism() {
    let dir = TempDir::new().unwrap();
    let gamma = write(&dir, "gamma.json", r#"{"images": ["(0 1 2)"]}"#);
    sfw()
        .args(["induce", "--group", "S3", "--subgroup", "A3", "--target", "S3", "--gamma"])
        .arg(&gamma)
        .assert()
        .success()
        .stdout("dim 2, identity true, multiplicative true, unitary true\n");
    let not_hom = write(&dir, "bad.json", r#"{"images": ["(0 1)"]}"#);
    sfw()
        .args(["induce", "--group", "S3", "--subgroup", "A3", "--target", "S3", "--gamma"])
        .arg(&not_hom)
        .assert()
        .code(3);
}
