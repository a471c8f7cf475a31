use std::process::{Command, Output};

use serde_json::Value;

fn paley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paley")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = paley(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bound_all_is_exact_for_gp_27_13() {
    let v = json(&["bound", "3", "3", "13", "--all"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "bound");
    assert_eq!(v["best_upper"], 3);
    assert_eq!(v["best_lower"], 3);
    assert_eq!(v["exact"], true);
    let names: Vec<&str> = v["certificates"].as_array().unwrap().iter().map(|c| c["bound"].as_str().unwrap()).collect();
    for expected in ["trivial", "thm11", "thm13", "subfield"] {
        assert!(names.contains(&expected), "{names:?}");
    }
}

#[test]
fn bound_csv_has_one_row_per_certificate() {
    let out = paley(&["--format", "csv", "bound", "3", "3", "13"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("bound,kind,value,applicable,informative,reason"));
    assert!(text.lines().any(|l| l.starts_with("thm13,upper,3,")));
}

#[test]
fn directions_of_prime_subfield_square() {
    let v = json(&["directions", "3", "2", "--A", "subfield:1", "--B", "subfield:1"]);
    assert_eq!(v["size"], 4);
    assert_eq!(v["bound"], 4);
    assert_eq!(v["sharp"], true);
    assert_eq!(v["directions"]["directions"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["directions"]["infinity"], true);
}

#[test]
fn enumerate_cliques_through_zero_and_one() {
    let v = json(&["clique", "3", "3", "13", "--enumerate", "--contains", "0,1"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["cliques"], serde_json::json!([[0, 1, 2]]));
}

#[test]
fn verify_exhaustive_directions_passes() {
    let out = paley(&["verify", "directions", "--q", "9", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn exit_codes() {
    assert_eq!(paley(&["field", "4", "1"]).status.code(), Some(2));
    assert_eq!(paley(&["bound", "3", "3", "12"]).status.code(), Some(2));
    // condition (iii) fails, so the certificate is inapplicable
    assert_eq!(paley(&["bound", "3", "4", "10", "--prop41", "3"]).status.code(), Some(2));
    assert_eq!(paley(&["clique", "3", "8", "2", "--time-limit", "0.05"]).status.code(), Some(4));
    assert_eq!(paley(&["bound", "3", "4", "20", "--prop41", "3"]).status.code(), Some(0));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["--seed", "7", "verify", "redei"][..],
        &["family", "ex46"][..],
        &["bound", "5", "3", "31", "--all"][..],
    ] {
        let (a, b) = (paley(args), paley(args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
