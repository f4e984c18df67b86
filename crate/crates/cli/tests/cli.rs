use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parfac")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn gen_to(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = run(args);
    assert!(out.status.success());
    write(dir, name, &stdout(&out))
}

#[test]
fn tight_prints_four_passes() {
    let out = run(&["tight", "--r", "4", "--h", "2", "--l", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("deficiency(U, {}) = -2"));
}

#[test]
fn tight_json_and_domain_error() {
    let out = run(&["--json", "tight", "--r", "5", "--h", "3", "--l", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["deficiency"], -2);
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);

    let out = run(&["tight", "--r", "3", "--h", "4", "--l", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn spectrum_of_extremal_graph() {
    let dir = TempDir::new().unwrap();
    let h = gen_to(&dir, "h42.graph", &["gen", "H", "--r", "4", "--eta", "2"]);
    let out = run(&["spectrum", h.to_str().unwrap()]);
    let first = stdout(&out).lines().next().unwrap().to_string();
    assert_eq!(first, "3.64575131106");
    let out = run(&["spectrum", h.to_str().unwrap(), "--k", "1"]);
    assert_eq!(stdout(&out), "3.64575131106\n");
    let out = run(&["spectrum", h.to_str().unwrap(), "--k", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn factor_check_on_triangle() {
    let dir = TempDir::new().unwrap();
    let k3 = gen_to(&dir, "k3.graph", &["gen", "kn", "--n", "3"]);
    let c = write(&dir, "all-1.json", r#"{"g":[1,1,1],"f":[1,1,1]}"#);
    let out = run(&["factor", "check", k3.to_str().unwrap(), "--c", c.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"verdict\":\"not-exists\",\"violation\":{\"S\":[],\"T\":[],\"deficiency\":-1}}\n"
    );
    for method in ["oracle", "matching", "both"] {
        let out = run(&["factor", "check", k3.to_str().unwrap(), "--c", c.to_str().unwrap(), "--method", method]);
        assert!(stdout(&out).starts_with("verdict: not-exists"), "{method}");
    }
}

#[test]
fn factor_find_returns_verified_factor() {
    let dir = TempDir::new().unwrap();
    let k4 = gen_to(&dir, "k4.graph", &["gen", "kn", "--n", "4"]);
    let c = write(&dir, "c.txt", "all 1 1\n");
    let out = run(&["--json", "factor", "find", k4.to_str().unwrap(), "--c", c.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "exists");
    assert_eq!(v["factor"].as_array().unwrap().len(), 2);

    let out = run(&["factor", "find", k4.to_str().unwrap(), "--c", c.to_str().unwrap(), "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn family_sidecar_and_comment() {
    let dir = TempDir::new().unwrap();
    let side = dir.path().join("f.json");
    let out = run(&["gen", "F", "--r", "4", "--h", "2", "--l", "4", "--sidecar", side.to_str().unwrap()]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# family {\"U\":[0,1]"));
    assert_eq!(lines.next().unwrap(), "p 22 44");
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(v["params"]["l"], 4);
    assert_eq!(v["copies"].as_array().unwrap().len(), 4);
}

#[test]
fn theorem_check_reports_boundary() {
    let dir = TempDir::new().unwrap();
    let f = gen_to(&dir, "f.graph", &["gen", "F", "--r", "4", "--h", "2", "--l", "4"]);
    let c = write(&dir, "c.txt", "all 1 1\n");
    let out = run(&["--json", "thm", "check", f.to_str().unwrap(), "--c", c.to_str().unwrap(), "--theta", "1/4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "boundary");
    assert_eq!(v["branches"][0]["eigen_index"], 4);

    let out = run(&["thm", "check", f.to_str().unwrap(), "--c", c.to_str().unwrap(), "--theta", "0.3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis violated"));
}

#[test]
fn theorem_best_theta_on_complete_graph() {
    let dir = TempDir::new().unwrap();
    let k6 = gen_to(&dir, "k6.graph", &["gen", "kn", "--n", "6"]);
    let c = write(&dir, "c.txt", "all 1 3\n");
    let out = run(&["thm", "check", k6.to_str().unwrap(), "--c", c.to_str().unwrap(), "--best-theta"]);
    let text = stdout(&out);
    assert!(text.starts_with("theta = 1/2"));
    assert!(text.contains("overall: guaranteed"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["spectrum"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["thm", "check", "g", "--c", "c", "--theta", "1/2", "--best-theta"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--seed", "7", "gen", "gnp", "--n", "9", "--p", "0.5"]);
    let b = run(&["--seed", "7", "gen", "gnp", "--n", "9", "--p", "0.5"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--json", "tight", "--r", "4", "--h", "2", "--l", "6"]);
    let b = run(&["--json", "tight", "--r", "4", "--h", "2", "--l", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_graph_reports_line() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.graph", "p 2 1\ne 0 5\n");
    let out = run(&["spectrum", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
