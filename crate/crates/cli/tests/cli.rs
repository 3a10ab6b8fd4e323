use std::path::PathBuf;
use std::process::{Command, Output};

use cohom_core::report::Report;
use serde_json::Value;

fn algebra(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "algebras", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn cohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohom")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = cohom(&all);
    (serde_json::from_slice(&o.stdout).expect("valid JSON"), o.status.code().unwrap())
}

#[test]
fn hilbert_of_plane() {
    let o = cohom(&["hilbert", &algebra("plane.toml"), "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[1,2,3,4,5]");
    let o = cohom(&["hilbert", &algebra("plane.toml"), "--max-degree", "6"]);
    assert_eq!(stdout(&o).trim(), "[1,2,3,4,5,6,7]");
}

#[test]
fn end_object_of_plane() {
    let plane = algebra("plane.toml");
    let (v, code) = json(&["cohom", &plane, &plane, "--sigma-a", "diag(1,1)", "--sigma-b", "diag(1,1)"]);
    assert_eq!(code, 0);
    let rels: Vec<&str> = v["result"]["relations"].as_array().unwrap().iter().map(|r| r["relation"].as_str().unwrap()).collect();
    assert_eq!(rels.len(), 3);
    assert!(rels.contains(&"z1_1*z2_1 - q*z2_1*z1_1"), "{rels:?}");
    assert!(rels.contains(&"z1_2*z2_2 - q*z2_2*z1_2"), "{rels:?}");
    assert_eq!(v["result"]["hilbert"][2], 13);
    let report: Report = serde_json::from_value(v["report"].clone()).unwrap();
    assert!(report.passed() && report.checks.len() == 2);
}

#[test]
fn verify_theorem4_passes() {
    let o = cohom(&["verify", "theorem4", &algebra("plane.toml"), "--samples", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS theorem4/s1/coassociativity [degrees 1..=1]"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let args = ["verify", "corollary2", &algebra("plane2.toml"), "--seed", "5", "--samples", "3", "--json"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["report"]["elapsed_ms"] = Value::Null;
        v
    };
    let a = strip(cohom(&args));
    let b = strip(cohom(&args));
    assert_eq!(a, b);
    let mut r = a["report"].clone();
    r["elapsed_ms"] = 0.into();
    let report: Report = serde_json::from_value(r.clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), r);
}

#[test]
fn twisted_plane() {
    let (v, code) = json(&["twist", &algebra("plane.toml"), "--sigma-a", "[[3, 0], [0, 5]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["relations"][0]["relation"], "x*y - 5/3*q*y*x");
}

#[test]
fn failures_exit_with_one() {
    let o = cohom(&["twist", &algebra("plane.toml"), "--sigma-a", "[[1, 1], [0, 1]]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL admissible"));
    let o = cohom(&["dual", &algebra("cubic.toml")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not quadratic"));
}

#[test]
fn usage_errors_exit_with_two() {
    let (plane, plane2) = (algebra("plane.toml"), algebra("plane2.toml"));
    let cases: [&[&str]; 7] = [
        &["frobnicate"],
        &["info", "/nonexistent.toml"],
        &["twist", &plane],
        &["twist", &plane, "--sigma-a", "diag(1,2,3)"],
        &["twist", &plane, "--sigma-a", "[[1,2],[3]]"],
        &["white", &plane, &plane2],
        &["verify", "theorem9", &plane],
    ];
    for args in cases {
        let o = cohom(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn products_of_planes() {
    let (p, p2, j) = (algebra("plane.toml"), algebra("plane2.toml"), algebra("jordan.toml"));
    let (v, code) = json(&["white", &p2, &j]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["hilbert"], serde_json::json!([1, 4, 9, 16, 25]));
    let (v, _) = json(&["triangle", &p, &p]);
    assert_eq!(v["result"]["hilbert"][2], 13);
    let (v, _) = json(&["black", &p2, &j]);
    assert_eq!(v["result"]["generators"][1], "x_y");
    let (v, _) = json(&["info", &algebra("free2.toml")]);
    assert_eq!(v["result"]["hilbert"], serde_json::json!([1, 2, 4, 8, 16]));
}

#[test]
fn composition_of_twisted_coevaluations() {
    let p = algebra("plane.toml");
    let o = cohom(&["compose", &p, &p, &p, "--sigma-a", "diag(2,3)", "--sigma-b", "diag(1,q)", "--sigma-c", "diag(5,1)", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS composite-in-omega"));
}

#[test]
fn shared_sigma_applies_to_every_space() {
    let p = algebra("plane.toml");
    let (shared, _) = json(&["cohom", &p, &p, "--sigma", "diag(2,q)", "--max-degree", "3"]);
    let (split, _) = json(&["cohom", &p, &p, "--sigma-a", "diag(2,q)", "--sigma-b", "diag(2,q)", "--max-degree", "3"]);
    assert_eq!(shared["result"], split["result"]);
    let (partial, _) = json(&["cohom", &p, &p, "--sigma", "diag(2,q)", "--sigma-b", "diag(1,1)", "--max-degree", "3"]);
    assert_ne!(partial["result"], shared["result"]);
}
