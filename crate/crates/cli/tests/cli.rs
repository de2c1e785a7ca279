use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstructure")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SMALL: [&str; 12] = [
    "verify", "--family", "jacobi", "--identity", "structure,eigenvalue", "--n-max", "3", "--samples", "2",
    "--degree-cap", "6", "--no-timestamp",
];

#[test]
fn passing_grid_exits_zero() {
    let o = run(&SMALL);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["run"]["timestamp"], serde_json::Value::Null);
    assert_eq!(v["results"].as_array().unwrap().len(), 12);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["status"] == "pass" && r["residual"].is_null()));
}

#[test]
fn same_seed_same_bytes() {
    let a = run(&[&SMALL[..], &["--seed", "11"]].concat());
    let b = run(&[&SMALL[..], &["--seed", "11"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&[&SMALL[..], &["--seed", "12"]].concat());
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn failing_identity_exits_one() {
    let o = run(&[
        "verify", "--family", "cq-ultraspherical", "--identity", "ultra-combination-stated", "--n-max", "2",
        "--samples", "1", "--degree-cap", "4", "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["results"][0];
    assert_eq!(r["status"], "fail");
    assert!(r["residual"]["coeffs"][0].as_str().unwrap().contains('/'));
}

#[test]
fn informational_results_do_not_fail() {
    let o = run(&[
        "verify", "--family", "askey-wilson", "--identity", "q-bispectral", "--n-max", "2", "--samples", "1",
        "--degree-cap", "4", "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"info\""));
}

#[test]
fn single_point_run() {
    let o = run(&[
        "verify", "--family", "big-q-jacobi", "--identity", "dq-structure", "--params", "a=1/3,b=1/4,c=1/5,q=1/2",
        "--n-max", "4", "--degree-cap", "6", "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 4);
    assert_eq!(v["results"][0]["params"]["c"], "1/5");
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["limits"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "hermite"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--identity", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "20", "--degree-cap", "8"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "jacobi", "--params", "alpha=-3,beta=1"]).status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.conf");
    std::fs::write(&path, "# small grid\nfamily = jacobi\nidentity = structure\nn-max = 2\nsamples = 1\nseed = 3\ndegree-cap = 5\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["verify", "--config", p, "--seed", "9", "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["run"]["seed"], 9);
    assert_eq!(v["run"]["degree_cap"], 5);
    std::fs::write(&path, "colour = red\n").unwrap();
    assert_eq!(run(&["verify", "--config", p]).status.code(), Some(2));
}

#[test]
fn limit_tables() {
    let o = run(&["limits", "--which", "cqjacobi-to-jacobi", "--alpha", "1", "--beta", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("step,parameter_value,max_deviation,ratio"));
    assert_eq!(lines.count(), 8);
    let o = run(&["limits", "--which", "aw-to-bigq", "--eps-steps", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 10);
}
