use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn mereo(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mereo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const TWO_POINTS: &str = r#"{"universe": ["a", "b"], "subbasis": [["a"], ["b"]]}"#;

#[test]
fn rc_lists_regions_from_stdin() {
    let out = mereo(&["rc", "--input", "-", "--json"], Some(TWO_POINTS));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["regions"].as_array().unwrap().len(), 4);
}

#[test]
fn check_axioms_exit_codes() {
    let ok = mereo(
        &["check-axioms", "--input", "-"],
        Some(r#"{"atoms": 2, "covering_mode": "discrete"}"#),
    );
    assert_eq!(ok.status.code(), Some(0));

    // Every triple covers: the weak axioms hold, the full ones do not.
    let corrupted = r#"{"atoms": 1, "covering": [[0,0,0],[0,1,0],[1,0,0],[0,0,1],[0,1,1],[1,0,1],[1,1,1],[1,1,0]]}"#;
    let bad = mereo(&["check-axioms", "--input", "-", "--json"], Some(corrupted));
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["classification"], "WECA");
}

#[test]
fn unknown_label_is_an_input_error() {
    let out = mereo(
        &["rc", "--input", "-"],
        Some(r#"{"universe": ["a"], "subbasis": [["z"]]}"#),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("z"));
}

#[test]
fn malformed_json_is_an_input_error() {
    let out = mereo(&["check-axioms", "--input", "-"], Some("{\"atoms\": 2,"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn atom_point_frames_need_a_topology() {
    let eca = r#"{"atoms": 2, "covering_mode": "discrete"}"#;
    assert_eq!(
        mereo(&["represent", "--kind", "type1", "--input", "-"], Some(eca))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mereo(
            &["represent", "--kind", "parametrized", "--input", "-"],
            Some(eca)
        )
        .status
        .code(),
        Some(0)
    );
}

#[test]
fn represent_type2_reports_embedding() {
    let out = mereo(
        &["represent", "--kind", "type2", "--input", "-", "--json"],
        Some(TWO_POINTS),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pipeline"], "type2");
    assert!(
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["pass"] == true),
        "{v}"
    );
}

#[test]
fn example1_passes() {
    let out = mereo(&["example1"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("non-definability witnessed"));
}

#[test]
fn overridden_caps_warn() {
    let out = mereo(&["example1", "--cap-worlds", "8"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn random_rejects_large_universes() {
    let out = mereo(&["random", "--trials", "1", "--max-universe", "9"], None);
    assert_eq!(out.status.code(), Some(2));
}
