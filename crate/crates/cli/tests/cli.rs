//! End-to-end runs of the `groupdet` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn groupdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn det_c2_symbolic_prints_the_determinant() {
    let out = groupdet(&["det", "C2", "--mode", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x[e]^2 - x[a]^2\n");
}

#[test]
fn det_c3_symbolic_matches_circulant() {
    let out = groupdet(&["det", "C3", "--mode", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for term in ["x[e]^3", "x[a]^3", "x[a^2]^3", "3 * x[e]*x[a]*x[a^2]"] {
        assert!(text.contains(term), "{term} missing from {text}");
    }
}

#[test]
fn det_numeric_identities_pass() {
    let out = groupdet(&[
        "det", "Q3", "--mode", "numeric", "--trials", "3", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 2, "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn inverse_c2_inline_coefficients() {
    let out = groupdet(&["inverse", "C2", "--coeffs", r#"{"e":"2","a":"1"}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "e: 2/3\na: -1/3\n");
}

#[test]
fn inverse_reads_a_coefficient_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, r#"{"e": "1/2", "b": "3"}"#).unwrap();
    let out = groupdet(&["inverse", "D3", "--coeffs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // (e/2 + 3b)(e/2 - 3b) = (1/4 - 9)e, so the inverse is (e/2 - 3b)/(-35/4).
    let text = stdout(&out);
    assert!(text.contains("e: -2/35\n"), "{text}");
    assert!(text.contains("b: 12/35\n"), "{text}");
    assert!(text.contains("a: 0\n"), "{text}");
}

#[test]
fn inverse_of_singular_element_exits_2() {
    let out = groupdet(&["inverse", "C2", "--coeffs", r#"{"e":"1","a":"1"}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn inverse_rejects_unknown_element_names() {
    let out = groupdet(&["inverse", "C2", "--coeffs", r#"{"e":"1","b":"1"}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_d3_json_has_passes_and_skips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = groupdet(&[
        "verify",
        "all",
        "D3",
        "--mode",
        "symbolic",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["command"], "verify");
    assert_eq!(report["group"], "D3");
    let results = report["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        let id = r["id"].as_str().unwrap();
        match r["status"].as_str().unwrap() {
            "pass" => {}
            "skipped" => assert!(r["reason"].as_str().unwrap().contains("m odd"), "{id}"),
            other => panic!("{id}: {other}"),
        }
    }
    let skipped: Vec<&str> = results
        .iter()
        .filter(|r| r["status"] == "skipped")
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    for id in ["T6.2.4", "T6.2.13", "NONVANISH"] {
        assert!(skipped.contains(&id), "{id} should be skipped on D3");
    }
}

#[test]
fn verify_all_exits_0_over_the_acceptance_groups() {
    for g in [
        "C1", "C4", "C2xC2", "C2xC2xC2", "D3", "D4", "Q2", "D5", "Q3",
    ] {
        let out = groupdet(&["verify", "all", g, "--trials", "3"]);
        assert_eq!(out.status.code(), Some(0), "{g}: {}", stdout(&out));
    }
}

#[test]
fn verify_on_the_wrong_family_exits_2() {
    assert_eq!(groupdet(&["verify", "L4.1.1", "C4"]).status.code(), Some(2));
}

#[test]
fn unknown_group_or_check_exits_2() {
    assert_eq!(groupdet(&["info", "D2"]).status.code(), Some(2));
    assert_eq!(groupdet(&["info", "X7"]).status.code(), Some(2));
    assert_eq!(groupdet(&["verify", "T9.9.9", "D3"]).status.code(), Some(2));
    assert_eq!(groupdet(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn info_lists_element_names() {
    let out = groupdet(&["info", "Q2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order:      8"));
    assert!(
        text.contains("e, a, a^2, a^3, b, a*b, a^2*b, a^3*b"),
        "{text}"
    );
}

#[test]
fn reps_json_has_one_row_per_representation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reps.json");
    let out = groupdet(&["reps", "D4", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let reps = v["payload"]["representations"].as_array().unwrap();
    assert_eq!(reps.len(), 5);
    let squares: u64 = reps
        .iter()
        .map(|r| r["degree"].as_u64().unwrap().pow(2))
        .sum();
    assert_eq!(squares, 8);
}

#[test]
fn report_is_byte_identical_for_equal_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = groupdet(&["report", "D4", "--seed", "7", "--json", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn report_to_stdout_follows_the_schema() {
    let out = groupdet(&["report", "C3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["version", "group", "command", "seed", "results", "payload"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["seed"], 1);
    for r in v["results"].as_array().unwrap() {
        assert!(r.get("id").is_some() && r.get("status").is_some());
    }
}
