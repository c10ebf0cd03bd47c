use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn klr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr"))
        .args(args)
        .output()
        .expect("klr runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("klr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn graph_of_adjoint_sl3_has_eight_vertices() {
    let out = klr(&["crystal", "graph", "--n", "2", "--lambda", "1,1", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    let nodes = dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")).count();
    assert_eq!(nodes, 8);
    // Every vertex of B(ϖ_1 + ϖ_2) except the lowest has an out-arrow:
    // 8 arrows in all.
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 8);
}

#[test]
fn graph_of_sl2_fundamental_is_a_chain() {
    let out = klr(&["crystal", "graph", "--n", "1", "--lambda", "1", "--format", "json"]);
    assert!(out.status.success());
    let g: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(g["edges"].as_array().unwrap().len(), 1);
}

#[test]
fn graph_of_zero_weight_is_a_point() {
    let out = klr(&["crystal", "graph", "--n", "2", "--lambda", "0,0", "--format", "json"]);
    assert!(out.status.success());
    let g: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 1);
}

#[test]
fn readings_give_the_same_graph() {
    let me = klr(&["crystal", "graph", "--n", "3", "--partition", "2,1", "--reading", "middle-eastern"]);
    let fe = klr(&["crystal", "graph", "--n", "3", "--partition", "2,1", "--reading", "far-eastern"]);
    assert_eq!(stdout(&me), stdout(&fe));
}

#[test]
fn invalid_weights_exit_with_two() {
    for args in [
        &["crystal", "graph", "--n", "2", "--lambda", "-1,0"][..],
        &["crystal", "graph", "--n", "2", "--lambda", "1,1,1"][..],
        &["crystal", "graph", "--n", "1", "--partition", "2,1"][..],
        &["crystal", "graph", "--n", "2"][..],
    ] {
        let out = klr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_phi_lambda_passes_and_writes_report() {
    let report = scratch("phi.json");
    let out = klr(&[
        "verify", "phi-lambda", "--n", "2", "--lambda", "1,1", "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["reports"][0]["tableaux"], 8);
    assert_eq!(serde_json::from_slice::<Value>(&out.stdout).unwrap(), json);
}

#[test]
fn verify_multiplicity_full_sweep() {
    let out = klr(&["verify", "multiplicity", "--max-mu", "6", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["checks"][0]["cases"], 126);
}

#[test]
fn example_one_prints_descent_data() {
    let out = klr(&["verify", "example-1", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("i_T = 2"));
    assert!(text.contains("ε = 3"));
    assert!(text.contains("T⁺ = 112246/2245/35/56/6"));
}

#[test]
fn other_sweeps_pass() {
    for args in [
        &["verify", "serre", "--n", "2", "--partitions", "2,1;2,2"][..],
        &["verify", "reorder", "--max-mu", "3", "--n", "4"][..],
        &["verify", "hook", "--max-mu", "3", "--n", "4"][..],
        &["verify", "binfinity", "--samples", "50"][..],
        &["verify", "nilhecke", "--max-m", "4", "--samples", "10"][..],
    ] {
        assert_eq!(klr(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn segment_character() {
    let out = klr(&["char", "--segments", "1,2;1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2·(1,1,2) + (1,2,1)");
}

#[test]
fn graded_character_specialises_to_ungraded() {
    let graded = klr(&["char", "--segments", "1,2;1,1", "--graded", "--format", "json"]);
    let plain = klr(&["char", "--segments", "1,2;1,1", "--format", "json"]);
    let at_one = |v: &Value| -> Vec<(Value, i64)> {
        v["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| {
                let sum = t["coeff"].as_object().unwrap().values().map(|c| c.as_i64().unwrap()).sum();
                (t["word"].clone(), sum)
            })
            .collect()
    };
    let g: Value = serde_json::from_slice(&graded.stdout).unwrap();
    let p: Value = serde_json::from_slice(&plain.stdout).unwrap();
    assert_eq!(at_one(&g), at_one(&p));
    assert_ne!(g, p);
}

#[test]
fn highest_weight_tableau_has_empty_word_character() {
    let file = scratch("hw.json");
    std::fs::write(&file, r#"{"rows": [[1, 1, 1], [2]]}"#).unwrap();
    let out = klr(&["char", "--tableau", file.to_str().unwrap(), "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let ch: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(ch["terms"].as_array().unwrap().len(), 1);
    assert_eq!(ch["terms"][0]["word"], serde_json::json!([]));
}

#[test]
fn malformed_input_exits_with_two() {
    assert_eq!(klr(&["char", "--segments", "1,x"]).status.code(), Some(2));
    assert_eq!(klr(&["char", "--segments", "0,2"]).status.code(), Some(2));
    let file = scratch("bad.json");
    std::fs::write(&file, r#"{"rows": [[2, 1]]}"#).unwrap();
    assert_eq!(klr(&["char", "--tableau", file.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(klr(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["crystal", "graph", "--n", "3", "--partition", "2,2,1", "--format", "json"];
    let a = klr(&args);
    let b = klr(&args);
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_klr"))
        .args(args)
        .env("KLR_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, env.stdout);
}
