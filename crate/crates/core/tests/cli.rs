use std::process::{Command, Output};

use affine_jack::jack::{jack_normalized, JackLabel};
use affine_jack::qseries::{NomeSeries, SeriesJson};
use serde_json::Value;

fn ajack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ajack"))
        .args(args)
        .env_remove("AJACK_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jack_json_round_trips_and_is_deterministic() {
    let args = ["jack", "compute", "--K", "2", "--k", "2", "--l", "3", "--order", "4", "--format", "json"];
    let a = ajack(&args);
    let b = ajack(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["K"], 2);
    assert_eq!(v["l"], 3);
    let json: SeriesJson = serde_json::from_value(v).unwrap();
    let parsed = NomeSeries::from_json(&json).unwrap();
    let direct = jack_normalized(JackLabel::new(2, 2, 3).unwrap(), 4).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn alpha_for_level_one() {
    let o = ajack(&["jack", "compute", "--K", "1", "--k", "2", "--l", "2", "--order", "1", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["alpha"], "1/20");
    assert_eq!(v["lead"], "-1/20");
    let un = ajack(&["jack", "compute", "--K", "1", "--k", "2", "--l", "2", "--order", "1", "--unnormalized", "--format", "json"]);
    let v: Value = serde_json::from_slice(&un.stdout).unwrap();
    assert_eq!(v["lead"], "0/1");
}

#[test]
fn default_order_from_environment() {
    let run = |env: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_ajack"));
        c.args(["jack", "compute", "--K", "1", "--k", "1", "--l", "1", "--format", "json"]);
        match env {
            Some(v) => c.env("AJACK_DEFAULT_ORDER", v),
            None => c.env_remove("AJACK_DEFAULT_ORDER"),
        };
        c.output().unwrap()
    };
    let v: Value = serde_json::from_slice(&run(Some("3")).stdout).unwrap();
    assert_eq!(v["order"], 3);
    let v: Value = serde_json::from_slice(&run(None).stdout).unwrap();
    assert_eq!(v["order"], 10);
    assert_eq!(run(Some("many")).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| ajack(args).status.code();
    assert_eq!(code(&["smatrix", "cross-check", "--K", "3", "--k", "2"]), Some(0));
    assert_eq!(code(&["jack", "check-level1", "--order", "4"]), Some(0));
    // parameter errors
    assert_eq!(code(&["jack", "compute", "--K", "1", "--k", "2", "--l", "1"]), Some(2));
    assert_eq!(code(&["jack", "compute", "--K", "-1", "--k", "2", "--l", "2"]), Some(2));
    assert_eq!(code(&["modular", "verify-s", "--K", "1", "--k", "1", "--tau", "0.3,-1"]), Some(2));
    assert_eq!(code(&["modular", "verify-s", "--K", "1", "--k", "2", "--tau", "0,0.3", "--order", "2"]), Some(2));
    assert_eq!(code(&["smatrix", "build", "--K", "1"]), Some(2));
    assert_eq!(code(&["selberg", "eval", "--n", "2", "--alpha", "-1", "--beta", "1", "--gamma", "0.5"]), Some(2));
    // a check that cannot pass at the requested tolerance
    let o = ajack(&["modular", "verify-s", "--K", "1", "--k", "2", "--order", "20", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn modular_report_json() {
    let o = ajack(&["modular", "verify-s", "--K", "2", "--k", "3", "--order", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    assert!(v["max_deviation"].as_f64().unwrap() < 1e-9);
}

#[test]
fn smatrix_formats() {
    let j = ajack(&["smatrix", "build", "--K", "2", "--k", "2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    let c = stdout(&ajack(&["smatrix", "build", "--K", "2", "--k", "2", "--form", "macdonald", "--format", "csv"]));
    assert_eq!(c.lines().next(), Some("m,l,re,im"));
    assert_eq!(c.lines().count(), 10);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("ajack-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s.json");
    let o = ajack(&["smatrix", "sj", "--K", "1", "--k", "2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["weight"], "-1/10");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn quick_suite() {
    let o = ajack(&["suite", "acceptance", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for id in 1..=11 {
        assert!(text.contains(&format!("A{id} PASS")), "{text}");
    }
}
