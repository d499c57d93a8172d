use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use amc_core::curve::{AMCurve, CountableCurve};

fn amc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amc"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("spawn amc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

// name, argv (without --deterministic), expected exit code
const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("curve_genus_classical", &["curve", "genus", "--curve", "curves/classical.json"], 0),
    ("curve_validate_q9_pair", &["curve", "validate", "--curve", "curves/q9_qbar3_pair.json"], 0),
    ("curve_count_classical_k2", &["curve", "count", "--curve", "curves/classical.json", "--k", "2"], 0),
    ("curve_zeta_classical", &["curve", "zeta", "--curve", "curves/classical.json"], 0),
    ("curve_prank_random", &["curve", "prank", "--p", "5", "--seed", "11"], 0),
    ("curve_new_random", &["curve", "new", "--p", "3", "--n", "1", "--m", "2", "--seed", "7"], 0),
    ("aut_claim_classical", &["aut", "claim", "--curve", "curves/classical.json"], 0),
    ("aut_claim_q9_diagonal", &["aut", "claim", "--curve", "curves/q9_diagonal.json"], 0),
    ("aut_structure_q3_distinct", &["aut", "structure", "--curve", "curves/q3_distinct.json"], 0),
    ("aut_verify_classical", &["aut", "verify", "--curve", "curves/classical.json"], 0),
    ("aut_orbits_q9_pair", &["aut", "orbits", "--curve", "curves/q9_qbar3_pair.json"], 0),
    ("aut_search_classical_d1", &["aut", "search", "--curve", "curves/classical.json", "--ambient", "1"], 0),
    ("quotient_sigma_x_classical", &["quotient", "sigma-x", "--curve", "curves/classical.json"], 0),
    ("quotient_sigma_y_classical", &["quotient", "sigma-y", "--curve", "curves/classical.json"], 0),
    ("quotient_diagonal_classical", &["quotient", "diagonal", "--curve", "curves/classical.json"], 0),
    ("quotient_ycurve_classical", &["quotient", "ycurve", "--qcurve", "curves/y_classical.json", "--zeta"], 0),
    ("quotient_zcurve_q5", &["quotient", "zcurve", "--qcurve", "curves/z_q5.json"], 0),
    ("quotient_yaut_classical", &["quotient", "yaut", "--qcurve", "curves/y_classical.json", "--ambient", "2"], 0),
];

#[test]
fn golden_reports() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, argv, code) in GOLDEN {
        let mut args = argv.to_vec();
        args.push("--deterministic");
        let first = amc(&args);
        assert_eq!(first.status.code(), Some(*code), "{name}: {}", stderr(&first));
        let second = amc(&args);
        assert_eq!(first.stdout, second.stdout, "{name}: two runs differ");
        let path = golden_dir().join(format!("{name}.json"));
        if update {
            std::fs::write(&path, &first.stdout).unwrap();
            continue;
        }
        let want = std::fs::read(&path).unwrap_or_default();
        if want != first.stdout {
            stale.push(*name);
        }
    }
    assert!(stale.is_empty(), "golden mismatch (rerun with UPDATE_GOLDEN=1 after review): {stale:?}");
}

#[test]
fn timestamp_only_without_deterministic() {
    let args = ["curve", "genus", "--classical", "--p", "3"];
    let o = amc(&args);
    assert!(stdout(&o).contains("\"timestamp\""));
    let mut d = args.to_vec();
    d.push("--deterministic");
    assert!(!stdout(&amc(&d)).contains("timestamp"));
}

#[test]
fn count_matches_library() {
    let o = amc(&["curve", "count", "--curve", "curves/classical.json", "--k", "2", "--deterministic"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lib = AMCurve::classical(3).unwrap().count_places(2).unwrap();
    assert_eq!(v["results"]["places"]["value"].as_u64(), Some(lib));
}

#[test]
fn every_result_names_its_source() {
    for (_, argv, _) in GOLDEN {
        let mut args = argv.to_vec();
        args.push("--deterministic");
        let v: serde_json::Value = serde_json::from_slice(&amc(&args).stdout).unwrap();
        for (key, r) in v["results"].as_object().unwrap() {
            let s = r["source"].as_str().unwrap_or("");
            assert!(!s.is_empty(), "{argv:?}: {key} has no source");
        }
        assert!(v["inputs"]["seed"].is_u64() || argv.contains(&"quotient"), "{argv:?}: no seed");
    }
}

#[test]
fn seed_is_recorded() {
    let o = amc(&["curve", "genus", "--p", "3", "--seed", "42", "--deterministic"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["inputs"]["seed"], 42);
}

#[test]
fn exit_codes() {
    // guard refusal
    let o = amc(&["curve", "zeta", "--curve", "curves/q9_qbar3_pair.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("desk-scale limit"));

    let o = amc(&["aut", "search", "--curve", "curves/classical.json", "--ambient", "1", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));

    // ambient field too small names the field that is needed
    let o = amc(&["aut", "search", "--curve", "curves/q3_distinct.json", "--ambient", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("GF(3^2)"), "{}", stderr(&o));

    let o = amc(&["quotient", "zcurve", "--p", "3", "--l=-1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p ≠ 3"));

    let o = amc(&["quotient", "diagonal", "--curve", "curves/q3_distinct.json"]);
    assert_eq!(o.status.code(), Some(2));

    let o = amc(&["curve", "genus"]);
    assert_eq!(o.status.code(), Some(2));

    let o = amc(&["curve", "frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_curve_file_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"format\": \"amc-curve/1\",\n  \"field\": {\"p\": 3, \"degree\": 1},\n  \"l1\": 7\n}\n").unwrap();
    let o = amc(&["curve", "genus", "--curve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(msg.contains("bad.json") && msg.contains("line"), "{msg}");

    std::fs::write(&path, "{\"format\": \"amc-curve/9\"}").unwrap();
    let o = amc(&["curve", "genus", "--curve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn math_failure_exits_one() {
    // L1 != L2 with both kernels in GF(9): the search finds the swap maps too
    let o = amc(&["aut", "search", "--curve", "curves/q3_distinct.json", "--ambient", "2", "--deterministic"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "fail");
}

#[test]
fn diagonal_writes_a_loadable_ycurve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.json");
    let o = amc(&["quotient", "diagonal", "--curve", "curves/classical.json", "--curve-out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = amc(&["quotient", "ycurve", "--qcurve", path.to_str().unwrap(), "--deterministic"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"]["genus"]["value"], 2);
}

#[test]
fn curve_new_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = amc(&["curve", "new", "--p", "3", "--m", "2", "--seed", "5", "--curve-out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = amc(&["curve", "genus", "--curve", path.to_str().unwrap(), "--deterministic"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"]["genus"]["value"], 64);
}
