use std::process::Command;

use rider_workbench::cli::{run, CliError};

fn run_str(args: &[&str]) -> Result<String, CliError> {
    let mut out = Vec::new();
    run(std::iter::once("riders").chain(args.iter().copied()), &mut out)?;
    Ok(String::from_utf8(out).unwrap())
}

fn exit_code(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_riders")).args(args).output().unwrap().status.code().unwrap()
}

#[test]
fn simulate_text_round_trips() {
    let text = run_str(&["simulate", "--moves", "2,1", "1,-2", "--start", "1/3,0"]).unwrap();
    let (rider, t) = rider_workbench::formats::parse_trajectory_text(&text).unwrap();
    assert_eq!(rider, rider_core::Rider::orthonightrider());
    assert_eq!(t.len(), 4);
    assert!(t.is_cyclic());
}

#[test]
fn moves_accept_one_quoted_argument() {
    let a = run_str(&["closed-form", "--moves", "2,1 1,-2", "--q", "4"]).unwrap();
    let b = run_str(&["closed-form", "--moves", "2,1", "1,-2", "--q", "4"]).unwrap();
    assert_eq!(a, b);
    assert!(a.contains("\"denominator\": \"120\""));
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("lateral.json");
    std::fs::write(&cfg, r#"{"board":"square","moves":[[2,1],[2,-1]],"q":3}"#).unwrap();
    let cfg = cfg.to_str().unwrap();
    let v: serde_json::Value = serde_json::from_str(&run_str(&["denominator", "--config", cfg]).unwrap()).unwrap();
    assert_eq!(v["denominator"], "4");
    let v: serde_json::Value = serde_json::from_str(&run_str(&["denominator", "--config", cfg, "--q", "1"]).unwrap()).unwrap();
    assert_eq!(v["denominator"], "1");
}

#[test]
fn board_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let board = dir.path().join("tri.json");
    std::fs::write(&board, r#"{"corners":[["0","0"],["2","0"],["0","1"]]}"#).unwrap();
    let text = run_str(&["corner-trajectories", "--moves", "1,1", "1,-1", "--board", board.to_str().unwrap(), "--max-steps", "6"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(!v["trajectories"].as_array().unwrap().is_empty());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    let printed = run_str(&["count", "--moves", "1,1", "1,-1", "--q", "2", "--n-max", "3", "--out", path.to_str().unwrap()]).unwrap();
    assert!(printed.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "n,u\n0,0\n1,0\n2,4\n3,26\n");
}

#[test]
fn decimal_output_is_labelled() {
    let text = run_str(&["denominator", "--moves", "2,1", "1,2", "--q", "2", "--decimal"]).unwrap();
    assert!(text.contains("approx_point"));
    let text = run_str(&["simulate", "--moves", "2,1", "1,-2", "--start", "1/3,0", "--decimal"]).unwrap();
    assert!(text.contains("# approx 0.333333,0.000000"));
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["closed-form", "--moves", "2,1", "1,-2", "--q", "2"]), 0);
    assert_eq!(exit_code(&["denominator", "--moves", "2,4", "1,2", "--q", "2"]), 2);
    assert_eq!(exit_code(&["denominator", "--moves", "2,1", "1,2"]), 2);
    assert_eq!(exit_code(&["simulate", "--moves", "2,1", "1,2", "--start", "1/2,1/2"]), 2);
    assert_eq!(exit_code(&["no-such-command"]), 2);
    assert_eq!(exit_code(&["period", "--moves", "1,1", "1,-1", "--q", "3", "--n-max", "6"]), 3);
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn period_and_conjecture_json() {
    let v: serde_json::Value =
        serde_json::from_str(&run_str(&["period", "--moves", "1,1", "1,-1", "--q", "3", "--n-max", "32"]).unwrap()).unwrap();
    assert_eq!(v["period"], 2);
    assert_eq!(v["coefficients"][0][6], "1/6");
    let v: serde_json::Value =
        serde_json::from_str(&run_str(&["conjecture", "--moves", "1,1", "1,-1", "--q", "2", "--n-max", "24"]).unwrap()).unwrap();
    assert_eq!(v["period"], 1);
    assert_eq!(v["denominator"], "1");
    assert_eq!(v["divides"], true);
}

#[test]
fn float_sim_with_irrational_slopes() {
    let slopes = format!("{},{}", std::f64::consts::SQRT_2 - 1.0, -std::f64::consts::PI);
    let text = run_str(&["float-sim", "--slopes", &slopes, "--start", "0.5,0", "--max-steps", "50"]).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("step,x,y,dist_to_limit"));
    assert_eq!(lines.count(), 50);
}
