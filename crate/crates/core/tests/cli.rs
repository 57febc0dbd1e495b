use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffdirichlet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_emits_witness_rows() {
    let o = run(&["dirichlet", "solve", "--Y", "T^-1", "--t", "1,1", "--t", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["report"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["witness_q"][0], "T");
    assert!(rows.iter().all(|r| r["solvable"] == true));
    assert_eq!(v["config"]["field"], "F_2");
}

#[test]
fn solve_csv_summary() {
    let o = run(&["dirichlet", "solve", "--Y", "T^-1", "--t", "1,1", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().last(), Some("1,1;true;1;T"));
}

#[test]
fn improve_window_over_random_forms() {
    let o = run(&["--q", "3", "--seed", "7", "dirichlet", "improve", "--random", "--n", "2", "--eps", "e^-1", "--window", "2..3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["report"]["rows"].as_array().unwrap().len() > 1);
}

#[test]
fn lattice_and_flow() {
    let o = run(&["lattice", "lambda1", "--basis", "T,0|0,T^-2"]);
    assert_eq!(stdout(&o), "-2\n");
    let o = run(&["lattice", "lambda1", "--basis", "identity", "--k", "3"]);
    assert_eq!(stdout(&o), "0\n");
    let o = run(&["flow", "trace", "--Y", "T^-1+T^-3", "--window", "0..3", "--eps", "e^-1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 4);
    assert!(text.lines().skip(1).all(|l| l.split(';').count() == 3), "{text}");
}

#[test]
fn goodness_commands() {
    let o = run(&["good", "check", "--phi", "x^2", "--eps-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["good", "federer", "--q", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["good", "federer", "--q", "9"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["report"]["note"].is_string());
    let o = run(&["good", "margin", "--map", "x, x^2", "--depth", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["s"], 2);
}

#[test]
fn constants() {
    let o = run(&["consts", "epsilon0", "--n", "2", "--C", "2", "--alpha", "1/2", "--D", "e^2"]);
    assert_eq!(stdout(&o), "1/(36*e^24)\n");
}

#[test]
fn measure_commands() {
    let o = run(&["measure", "probe", "--depth", "8", "--bounds", "4..5", "--format", "csv"]);
    assert_eq!(stdout(&o), "S,count,depth,fraction\n4,0,0,0\n5,0,0,0\n");
    let o = run(&["measure", "prop-instance", "--t", "4,2,2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exterior_check() {
    let o = run(&["exterior", "check-normlike", "--n", "2", "--samples", "200", "--fields", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn report_goes_to_out_file() {
    let path = std::env::temp_dir().join(format!("ffd-cli-test-{}.txt", std::process::id()));
    let o = run(&["--out", path.to_str().unwrap(), "lattice", "lambda1", "--basis", "identity", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_codes() {
    // malformed input
    assert_eq!(run(&["dirichlet", "solve", "--Y", "T^-1", "--t", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["--q", "6", "lattice", "lambda1", "--basis", "identity"]).status.code(), Some(2));
    assert_eq!(run(&["lattice", "lambda1", "--basis", "T,0|0,0"]).status.code(), Some(2));
    // budget
    assert_eq!(run(&["--budget", "10", "measure", "probe"]).status.code(), Some(3));
    // golden
    assert_eq!(run(&["golden", "run", "--suite", "probe_x_x2_q2"]).status.code(), Some(0));
}
