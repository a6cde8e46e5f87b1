use std::process::{Command, Output};

use serde_json::Value;

fn qgrow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgrow")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qgrow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn grow_sym2_n3_reports_c3() {
    let o = qgrow(&["grow", "--n", "3", "--rep", "sym2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j = stdout_json(&o);
    assert_eq!(j["cartan"], serde_json::json!([[2, -1, 0], [-1, 2, -2], [0, -1, 2]]));
    assert_eq!(j["cartan_route_b"], j["cartan"]);
    assert_eq!(j["lambda"], "q^(-4/3)");
    assert_eq!(j["series"], "C3");
    assert_eq!(j["q_star"], "q^(2)");
}

#[test]
fn grow_wedge2_below_four_is_a_usage_error() {
    let o = qgrow(&["grow", "--n", "3", "--rep", "wedge2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("wedge2 requires n ≥ 4"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn grow_writes_diagram_dot() {
    let p = tmp("d4.dot");
    let o = qgrow(&["grow", "--n", "4", "--rep", "wedge2", "--dot", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let dot = std::fs::read_to_string(&p).unwrap();
    assert!(dot.starts_with("graph \"D4\" {"));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert!(!dot.contains("arrow"));
}

#[test]
fn radical_degree_two_is_empty() {
    for n in ["2", "3"] {
        let o = qgrow(&["radical", "--n", n, "--degree", "2", "--braiding", "star"]);
        assert_eq!(o.status.code(), Some(0));
        let j = stdout_json(&o);
        assert_eq!(j["right_kernel"], serde_json::json!([]));
        assert_eq!(j["left_kernel"], serde_json::json!([]));
    }
}

#[test]
fn radical_degree_three_lists_memberships() {
    let o = qgrow(&["radical", "--n", "2", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let j = stdout_json(&o);
    assert_eq!(j["right_kernel"].as_array().unwrap().len(), 2);
    let m = j["memberships"].as_array().unwrap();
    assert!(!m.is_empty());
    assert!(m.iter().all(|x| x["member"] == true));
}

#[test]
fn rmatrix_json_to_file() {
    let p = tmp("vector2.json");
    let o = qgrow(&["rmatrix", "--n", "2", "--rep", "vector", "--json", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    for key in ["rep", "n", "dim", "rvv", "eigenvalues", "minimal_polynomial", "lambda", "rprime"] {
        assert!(j.get(key).is_some(), "missing {key}");
    }
    assert_eq!(j["dim"], 2);
}

#[test]
fn tree_rank_four() {
    let p = tmp("tree.dot");
    let o = qgrow(&["tree", "--max-rank", "4", "--dot", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j = stdout_json(&o);
    let edges = j["edges"].as_array().unwrap();
    for (from, to) in [("B", 2), ("C", 3), ("D", 4)] {
        let e = edges
            .iter()
            .find(|e| e["to"]["series"] == from && e["to"]["rank"] == to)
            .unwrap_or_else(|| panic!("no edge to {from}{to}"));
        assert_eq!(e["status"], "verified");
    }
    let dot = std::fs::read_to_string(&p).unwrap();
    assert!(dot.contains("\"A3\" -> \"D4\" [label=\"wedge2, λ=q^(-1), verified\"];"));
}

#[test]
fn tree_rank_one_is_a_single_node() {
    let j = stdout_json(&qgrow(&["tree", "--max-rank", "1"]));
    assert_eq!(j["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(j["edges"], serde_json::json!([]));
}

#[test]
fn output_is_byte_deterministic() {
    let a = qgrow(&["grow", "--n", "3", "--rep", "vector"]);
    let b = qgrow(&["grow", "--n", "3", "--rep", "vector"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn passing_suites_exit_zero() {
    for suite in ["prop32", "prop33", "thm31", "thm32", "thm33", "prop41"] {
        let o = qgrow(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stderr(&o));
        let out = String::from_utf8_lossy(&o.stdout);
        assert!(!out.contains("FAIL"), "{suite}: {out}");
    }
}

#[test]
fn failing_suite_names_the_check() {
    let o = qgrow(&["verify", "--suite", "prop34"]);
    assert_eq!(o.status.code(), Some(1));
    let e = stderr(&o);
    assert!(e.contains("prop34: wedge2 n=4: minimal polynomial roots as printed"), "{e}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["grow", "--n", "3"],
        &["grow", "--n", "1", "--rep", "vector"],
        &["grow", "--n", "3", "--rep", "spin"],
        &["radical", "--n", "2", "--degree", "2", "--braiding", "other"],
        &["verify", "--suite", "prop99"],
        &["tree", "--max-rank", "0"],
    ] {
        let o = qgrow(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = qgrow(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("verify"));
}
