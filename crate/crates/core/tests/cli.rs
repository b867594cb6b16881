use std::io::Write;
use std::process::{Command, Output, Stdio};

fn qstirling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstirling")).args(args).env_clear().output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_outputs() {
    let o = qstirling(&["poly", "quasi", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1*t + 39*t^2 + 171*t^3 + 125*t^4\n");
    assert_eq!(stdout(&qstirling(&["poly", "eulerian", "1"])), "1*t\n");
    assert_eq!(stdout(&qstirling(&["poly", "jnr", "4", "--r", "3"])), "1 + 3*t\n");
    let json: serde_json::Value =
        serde_json::from_slice(&qstirling(&["poly", "quasi", "3", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["coefficients"], serde_json::json!(["0", "1", "13", "16"]));
    let kq = stdout(&qstirling(&["poly", "kquasi", "1", "--k", "3"]));
    assert_eq!(kq, "1*q*t*u^2\n");
}

#[test]
fn enumerate_outputs() {
    assert_eq!(stdout(&qstirling(&["enumerate", "quasi", "2", "--k", "2"])).lines().count(), 4);
    assert_eq!(stdout(&qstirling(&["enumerate", "stirling", "2", "--k", "2"])).lines().count(), 3);
    let empty = qstirling(&["enumerate", "quasi", "0", "--k", "2"]);
    assert_eq!(stdout(&empty), "\n");
    let csv = stdout(&qstirling(&["enumerate", "stirling", "2", "--stats", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("word,asc,des,plat"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["poly", "jnr", "4"][..],
        &["poly", "nonsense", "4"],
        &["enumerate", "quasi", "9"],
        &["enumerate", "quasi", "3", "--max-size", "0"],
        &["verify", "nonsense"],
        &["bijection", "phi-inv", "1,2,1,2"],
        &["bijection", "phi", "(1,2"],
    ] {
        let o = qstirling(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let err = String::from_utf8(qstirling(&["bijection", "phi-inv", "1,2,1,2"]).stderr).unwrap();
    assert!(err.contains("(1, 2, 3, 4)"), "{err}");
}

#[test]
fn max_size_flag_and_environment() {
    assert_eq!(qstirling(&["enumerate", "quasi", "4", "--k", "4"]).status.code(), Some(2));
    let big = qstirling(&["enumerate", "quasi", "4", "--k", "4", "--max-size", "16"]);
    assert_eq!(stdout(&big).lines().count(), 3360);
    let o = Command::new(env!("CARGO_BIN_EXE_qstirling"))
        .args(["enumerate", "quasi", "4"])
        .env_clear()
        .env("QSTIRLING_MAX_SIZE", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_qstirling"))
        .args(["poly", "quasi", "2"])
        .env_clear()
        .env("QSTIRLING_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "degree,coefficient\n0,0\n1,1\n2,3\n");
}

#[test]
fn verify_reports() {
    let o = qstirling(&["verify", "maxdes", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let last: serde_json::Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["claim"], "maxdes");
    assert_eq!(last["status"], "pass");
    assert_eq!(last["observed"]["canonical_images"], "16");

    let o = qstirling(&["verify", "transport", "--n", "3", "--k", "2", "--format", "json"]);
    let rep: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep["observed"]["trees"], 30);
    assert_eq!(rep["status"], "pass");

    let o = qstirling(&["verify", "symmetry", "--n", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let a = qstirling(&["verify", "all", "--paper-tables", "--format", "json"]);
    let b = qstirling(&["verify", "all", "--paper-tables", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let rep: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(rep["status"], "pass", "{line}");
    }
}

#[test]
fn bijection_round_trip_through_stdin() {
    let tree = "(4(1),6,3(7,5(8),2))";
    let word = stdout(&qstirling(&["bijection", "phi", tree]));
    assert_eq!(word, "4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3\n");
    let mut child = Command::new(env!("CARGO_BIN_EXE_qstirling"))
        .args(["bijection", "phi-inv"])
        .env_clear()
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(word.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), format!("{tree}\n"));

    let k3 = "(6(2|),3(5|7(|4),1))";
    let w = stdout(&qstirling(&["bijection", "phi", k3, "--k", "3"]));
    assert_eq!(w, "6,2,2,2,6,6,3,5,5,5,3,7,7,4,4,4,7,1,1,1,3\n");
    let kary = stdout(&qstirling(&["bijection", "psi-inv", w.trim()]));
    assert_eq!(stdout(&qstirling(&["bijection", "psi", kary.trim(), "--k", "3"])), w);
    let canonical = stdout(&qstirling(&["bijection", "canonical", "(4(1),3(2,5(8),7),6)"]));
    assert_eq!(canonical, "(6,4(1),3(2,7,5(8)))\n");
}
