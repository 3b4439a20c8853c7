use std::process::{Command, Output};

use serde_json::Value;

fn permprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permprod"))
        .args(args)
        .env_remove("PERMPROD_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = permprod(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    permprod(args).status.code().unwrap()
}

#[test]
fn solve_examples() {
    let v = json(&["solve", "3", "5", "8"]);
    assert_eq!(v["schema"], "permprod/1");
    assert_eq!(v["command"]["name"], "solve");
    assert_eq!(v["result"]["degree"], 10);
    assert_eq!(v["result"]["case"], "CEven_Case1_Exception358");
    assert_eq!(v["result"]["elements"][0]["cycles"], "(1,2,3)(4,5,6)(7,8,9)@10");
    assert_eq!(v["verification"]["passed"], true);
    assert!(v.get("timing").is_none());

    assert_eq!(json(&["solve", "2", "2", "2"])["result"]["degree"], 4);
    let v = json(&["solve", "8", "5", "3"]);
    assert_eq!(v["result"]["orders"], serde_json::json!([8, 5, 3]));
    assert_eq!(v["verification"]["passed"], true);

    let text = String::from_utf8(permprod(&["solve", "3", "5", "8"]).stdout).unwrap();
    assert!(text.contains("x = (1,2,3)(4,5,6)(7,8,9)@10"));
    assert!(text.contains("degree: 10"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["solve", "1", "2", "3"]), 2);
    assert_eq!(code(&["solve", "2", "3"]), 2);
    assert_eq!(code(&["solve", "2", "3", "x"]), 2);
    assert_eq!(code(&["extend", "2", "3"]), 2);
    assert_eq!(code(&["survey", "--max-n", "3"]), 2);
    assert_eq!(code(&["genus", "(1,2"]), 2);
    assert_eq!(code(&["genus", "(1,2)@3;(2,3)@3"]), 2);
    assert_eq!(code(&["cover", "2", "3", "7", "--labels", "a,b"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert!(!permprod(&["solve", "1", "2", "3"]).stderr.is_empty());
}

#[test]
fn extend_examples() {
    let v = json(&["extend", "2", "2", "2", "2"]);
    assert_eq!(v["result"]["degree"], 4);
    assert_eq!(v["result"]["split_tree"]["kind"], "involutions");
    let v = json(&["extend", "3", "3", "3", "4"]);
    assert_eq!(v["result"]["degree"], 6);
    assert_eq!(v["verification"]["passed"], true);
    let v = json(&["extend", "7", "3", "12", "2", "9"]);
    assert_eq!(v["result"]["degree"], 14);
    assert_eq!(v["result"]["split_tree"]["kind"], "split");
}

#[test]
fn survey_small() {
    let v = json(&["survey", "--max-n", "6", "--jobs", "2"]);
    assert_eq!(v["result"]["cells"], 36);
    assert_eq!(v["result"]["passed"], 36);
    assert_eq!(v["result"]["failures"], serde_json::json!([]));
    let v = json(&["survey", "--max-n", "8", "--timing"]);
    assert!(v["timing"]["max_solve_ms"].is_number());
}

#[test]
fn genus_mindegree_cover() {
    let v = json(&["genus", "(1,2);(1,2)"]);
    assert_eq!(v["result"]["orbits"], serde_json::json!([{ "orbit": [1, 2], "genus": 0 }]));
    let v = json(&["genus", "(1,2)", "(1,2)@3"]);
    assert_eq!(v["result"]["orbits"].as_array().unwrap().len(), 2);

    let v = json(&["mindegree", "3", "3", "4"]);
    assert_eq!(v["result"]["min_degree"], 6);
    assert_eq!(v["result"]["absent_at"], serde_json::json!([1, 2, 3, 4, 5]));
    assert_eq!(code(&["mindegree", "7", "7", "8", "--max-degree", "9"]), 4);
    assert_eq!(code(&["mindegree", "7", "7", "8", "--max-nodes", "10"]), 4);

    let v = json(&["cover", "2", "3", "7"]);
    assert!(v["result"]["degree"].as_u64().unwrap() <= 9);
    assert_eq!(v["verification"]["passed"], true);
    let v = json(&["cover", "3", "5", "8", "--labels", "a,b,c"]);
    let points = &v["result"]["branch_points"];
    assert_eq!(points[0]["label"], "a");
    assert_eq!(points[2]["cycle_lengths"], serde_json::json!([8, 2]));
}

#[test]
fn json_is_deterministic_and_seeded() {
    for args in [
        &["solve", "5", "7", "9", "--seed", "3", "--json"][..],
        &["extend", "2", "5", "9", "4", "--seed", "3", "--json"],
        &["survey", "--max-n", "9", "--json"],
    ] {
        assert_eq!(permprod(args).stdout, permprod(args).stdout);
    }
    let with_env = Command::new(env!("CARGO_BIN_EXE_permprod"))
        .args(["solve", "5", "7", "9", "--json"])
        .env("PERMPROD_SEED", "17")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(v["seed"], 17);
    assert_eq!(json(&["solve", "5", "7", "9", "--seed", "17"])["seed"], 17);
}

#[test]
fn help_exits_zero() {
    let out = permprod(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("mindegree"));
}
