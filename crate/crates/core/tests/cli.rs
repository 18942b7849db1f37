//! Exit codes and JSON output of the command line tool.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bundle(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("bundles").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coend-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> i32 {
    let out = Command::new(env!("CARGO_BIN_EXE_coend")).args(args).output().unwrap();
    out.status.code().unwrap()
}

fn run_on(cmd: &str, name: &str, extra: &[&str]) -> i32 {
    let path = bundle(name);
    let mut args = vec![cmd, "--bundle", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

const BUNDLES: [&str; 7] = [
    "vec_trivial.json",
    "svec_exterior.json",
    "svec_coend.json",
    "double_z2.json",
    "z2_triangular.json",
    "sweedler_f5.json",
    "z3_f7.json",
];

#[test]
fn shipped_bundles_validate() {
    for b in BUNDLES {
        assert_eq!(run_on("validate", b, &[]), 0, "{b}");
        assert_eq!(run_on("validate", b, &["--debug-revalidate"]), 0, "{b}");
        assert_eq!(run_on("coend", b, &[]), 0, "{b}");
        assert_eq!(run_on("theorems", b, &[]), 0, "{b}");
    }
}

#[test]
fn failed_checks_exit_one() {
    // S² = id, so u⁻¹ is balanced; the unit is not, as the braiding is not symmetric
    assert_eq!(run_on("check", "z3_f7.json", &["--element", "drinfeld_inverse", "--kind", "balanced"]), 0);
    assert_eq!(run_on("check", "z3_f7.json", &["--element", "unit", "--kind", "balanced"]), 1);
    assert_eq!(run_on("check", "z3_f7.json", &["--element", "unit", "--kind", "pivotal"]), 0);
    assert_eq!(run_on("factorizable", "double_z2.json", &[]), 0);
    assert_eq!(run_on("factorizable", "z2_triangular.json", &[]), 1);
    assert_eq!(run_on("check", "double_z2.json", &["--element", "R"]), 0);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["validate", "--bundle", "/nonexistent/bundle.json"]), 2);
    assert_eq!(run(&["frobnicate"]), 2);
    assert_eq!(run_on("check", "z3_f7.json", &["--element", "missing"]), 2);
    assert_eq!(run_on("search", "z3_f7.json", &["--kind", "nonsense"]), 2);

    let broken = scratch("broken.json");
    std::fs::write(&broken, "{\"field\": {\"kind\": \"prime\", \"p\": 5},").unwrap();
    assert_eq!(run(&["validate", "--bundle", broken.to_str().unwrap()]), 2);

    // a scalar outside the grammar
    let text = std::fs::read_to_string(bundle("z3_f7.json")).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["elements"]["unit"][0][0] = Value::String("1/".into());
    let bad = scratch("bad_scalar.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(run(&["validate", "--bundle", bad.to_str().unwrap()]), 2);
}

#[test]
fn zero_element_is_rejected() {
    let text = std::fs::read_to_string(bundle("double_z2.json")).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    let zero: Vec<Value> = (0..4).map(|_| Value::Array(vec![Value::String("0".into())])).collect();
    doc["elements"]["zero"] = Value::Array(zero);
    let path = scratch("with_zero.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(run(&["check", "--bundle", p, "--element", "zero", "--kind", "grouplike"]), 1);
    assert_eq!(run(&["check", "--bundle", p, "--element", "zero", "--kind", "central"]), 0);
}

#[test]
fn search_writes_json() {
    let out = scratch("search.json");
    let code = run_on("search", "z3_f7.json", &["--kind", "grouplike", "--json", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["command"], "search");
    assert_eq!(doc["hits"].as_array().unwrap().len(), 3);

    let all = scratch("search_all.json");
    let code = run_on("search", "z3_f7.json", &["--kind", "grouplike", "--strategy", "all", "--json", all.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc_all: Value = serde_json::from_str(&std::fs::read_to_string(&all).unwrap()).unwrap();
    assert_eq!(doc_all["hits"], doc["hits"]);

    // searching needs a prime field
    assert_eq!(run_on("search", "svec_coend.json", &["--kind", "grouplike"]), 2);
    assert_eq!(run_on("search", "svec_coend.json", &["--kind", "pivotal", "--strategy", "candidates"]), 0);
}
