use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_geomcrystal"));
    cmd.env_remove("GEOMCRYSTAL_SEED");
    cmd
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("geomcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn ones() -> PathBuf {
    write_tmp("ones.json", r#"{"all": "1"}"#)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn expand_all_ones() {
    let p = ones();
    let out = run(&["expand", "--variety", "v1", "--point", p.to_str().unwrap(), "--json"]);
    let v = stdout_json(&out);
    let map = v.as_object().unwrap();
    assert_eq!(map.len(), 32);
    assert_eq!(map["------"], "1");
    assert_eq!(map["++++++"], "1");
    assert_eq!(map.keys().next().unwrap(), "++++++");

    let out = run(&["expand", "--variety", "v2", "--point", p.to_str().unwrap(), "--json"]);
    assert_eq!(stdout_json(&out)["+----+"], "1");

    let out = run(&["expand", "--variety", "v1", "--point", p.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 32);
    assert!(text.lines().any(|l| l == "------ 1"));
}

#[test]
fn act_examples() {
    let p = ones();
    let p = p.to_str().unwrap();
    let v = stdout_json(&run(&["act", "--variety", "v1", "--k", "1", "--c", "3", "--point", p]));
    for (key, val) in v["x"].as_object().unwrap() {
        assert_eq!(val, if key == "1_1" { "3" } else { "1" }, "{key}");
    }
    let v = stdout_json(&run(&["act", "--variety", "v1", "--k", "5", "--c", "4", "--point", p]));
    assert_eq!(v["x"]["5_2"], "5/2");
    assert_eq!(v["x"]["5_1"], "8/5");

    let point = r#"{"x": {"6_3": "2", "4_4": "3/2", "3_3": "5", "2_2": "1/7", "5_2": "4", "4_3": "9",
        "3_2": "2/3", "6_2": "11", "4_2": "1", "5_1": "6/5", "1_1": "3", "2_1": "8", "3_1": "1/2",
        "4_1": "13", "6_1": "7/4"}}"#;
    let q = write_tmp("generic.json", point);
    let v = stdout_json(&run(&["act", "--variety", "v1", "--k", "0", "--c", "1", "--point", q.to_str().unwrap()]));
    let input: Value = serde_json::from_str(point).unwrap();
    assert_eq!(v, input);
}

#[test]
fn eval_examples() {
    let p = ones();
    let p = p.to_str().unwrap();
    let eval = |f: &str, k: &str| {
        let out = run(&["eval", "--fn", f, "--variety", "v1", "--k", k, "--point", p]);
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap().trim().to_string()
    };
    assert_eq!(eval("gamma", "0"), "1");
    assert_eq!(eval("epsilon", "0"), "14");
    assert_eq!(eval("epsilon", "6"), "3");

    let out = run(&["--json", "eval", "--fn", "epsilon", "--variety", "v2", "--k", "6", "--point", p]);
    assert_eq!(stdout_json(&out), Value::String("2".into()));
}

#[test]
fn sigma_bar_round_trip_via_stdin() {
    let p = ones();
    let v = stdout_json(&run(&["sigma-bar", "--point", p.to_str().unwrap()]));
    assert_eq!(v["a"], "1");
    assert_eq!(v["y"]["5_3"], "4");
    assert_eq!(v["y"]["6_1"], "1");

    let mut child = bin()
        .args(["sigma-bar-inv", "--point", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let y_only = serde_json::json!({ "y": v["y"] });
    child.stdin.take().unwrap().write_all(y_only.to_string().as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let back = stdout_json(&out);
    assert!(back["x"].as_object().unwrap().values().all(|r| r == "1"));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--suite", "lemma_sigma_bar", "--trials", "1", "--bound", "1"]);
    let report = stdout_json(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["checks"][0]["name"], "lemma_sigma_bar");
    assert!(report["checks"][0]["counterexample"].is_null());

    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    assert_eq!(run(&["verify", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn exploratory_checks_never_fail_the_run() {
    let out = run(&["verify", "--suite", "explore_sigma_intertwine_k3,explore_sigma_intertwine_k5", "--trials", "3"]);
    let report = stdout_json(&out);
    assert_eq!(report["checks"][0]["severity"], "exploratory");
    assert_eq!(report["checks"][1]["trials"], 0);
    assert!(report["checks"][1]["note"].is_string());
}

#[test]
fn seed_from_environment_and_flag_wins() {
    let args = ["verify", "--suite", "prop_inverse", "--trials", "2", "--no-timing"];
    let env_run = bin().args(args).env("GEOMCRYSTAL_SEED", "9").output().unwrap();
    assert_eq!(stdout_json(&env_run)["seed"], 9);
    let flag_run = bin().args(args).args(["--seed", "5"]).env("GEOMCRYSTAL_SEED", "9").output().unwrap();
    assert_eq!(stdout_json(&flag_run)["seed"], 5);
    assert_eq!(stdout_json(&run(&args))["seed"], 42);
}

#[test]
fn error_exit_codes() {
    let zero = write_tmp("zero.json", r#"{"all": "0"}"#);
    let out = run(&["expand", "--variety", "v1", "--point", zero.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let bad = write_tmp("bad.json", "{not json");
    let out = run(&["expand", "--variety", "v1", "--point", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let missing = run(&["expand", "--variety", "v1", "--point", "/nonexistent/point.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let p = ones();
    let p = p.to_str().unwrap();
    assert_eq!(run(&["act", "--variety", "v2", "--k", "1", "--c", "2", "--point", p]).status.code(), Some(2));
    assert_eq!(run(&["act", "--variety", "v1", "--k", "2", "--c", "0", "--point", p]).status.code(), Some(3));
    assert_eq!(run(&["act", "--variety", "v1", "--k", "2", "--c", "x", "--point", p]).status.code(), Some(2));
    assert_eq!(run(&["act", "--variety", "v1", "--k", "2", "--c", "-1/2", "--point", p]).status.code(), Some(0));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}
