use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtlattice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_adjoint_succeeds() {
    let o = run(&["verify", "--shape", "2,1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["labeling"]["vertices"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_exhaustive_diamond() {
    let o = run(&["verify", "--shape", "2,1", "--n", "3", "--exhaustive-diamond", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("diamond: pass"));
}

#[test]
fn dim_prints_both_counts() {
    let o = run(&["dim", "--shape", "2", "--n", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3, 3\n");
}

#[test]
fn single_row_shape() {
    assert_eq!(run(&["verify", "--shape", "3", "--n", "2"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["build", "--shape", "1,1,1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no fillings exist"));
    assert_eq!(run(&["build", "--shape", "x", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["build", "--shape", "1", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["build", "--shape", "1"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--shape", "1", "--n", "2", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn build_formats() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["build", "--shape", "2", "--n", "2"]))).unwrap();
    assert_eq!(json["edges"].as_array().unwrap().len(), 2);
    let dot = stdout(&run(&["build", "--shape", "2,1", "--n", "3", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("color=2"));
}

#[test]
fn outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("m{i}.json"))).collect();
    for p in &paths {
        let o = run(&["matrices", "--shape", "2,1", "--n", "3", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["H"]["1"]["dim"], 8);
    assert!(v["E"]["3"].is_object());
}

#[test]
fn matrices_for_chain() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["matrices", "--shape", "2", "--n", "2"]))).unwrap();
    assert_eq!(v["X"]["1"]["entries"], serde_json::json!([[0, 1, "1"], [1, 2, "2"]]));
    assert_eq!(v["Y"]["1"]["entries"], serde_json::json!([[1, 0, "2"], [2, 1, "1"]]));
    assert_eq!(v["H"]["1"]["entries"], serde_json::json!([[0, 0, "2"], [2, 2, "-2"]]));
}

#[test]
fn force_trace() {
    for extra in [&[][..], &["--per-component-forcing"][..]] {
        let mut args = vec!["force", "--shape", "2,1", "--n", "3"];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let trace = v["trace"].as_array().unwrap();
        assert!(trace.iter().any(|r| r["forced_by"] == "diamond"));
        assert!(trace.iter().all(|r| r["pi"].is_string()));
    }
}

#[test]
fn identity_is_seeded() {
    let a = run(&["identity", "--seed", "7", "--trials", "200", "--format", "json"]);
    let b = run(&["identity", "--seed", "7", "--trials", "200", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], 200);
}
