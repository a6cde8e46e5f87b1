//! Acceptance run: one PASS/FAIL line per criterion with timing.
//!
//! A few criteria fail because a quoted value disagrees with the exact
//! computation. Those are listed in `KNOWN` with the checks that fail; the
//! target itself fails if any other check fails, or if a known one starts
//! passing.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use qgrow::verify::{run_all, Criterion};

const KNOWN: [(usize, &[&str]); 5] = [
    (4, &["wedge2 n=4: minimal polynomial roots as printed", "wedge2 n=5: minimal polynomial roots as printed"]),
    (5, &["wedge2 n=4: R' equals the printed closed form"]),
    (6, &["n=2: degree-3 right kernel has dimension 1"]),
    (
        7,
        &[
            "coproduct of e2 e1 e1: coefficient of e2 e1 (x) e1",
            "coproduct of e3 e1 e1: coefficient of e3 e1 (x) e1",
            "coproduct of e3 e2 e2: coefficient of e3 e2 (x) e2",
        ],
    ),
    (11, &["criteria 1-10 all pass"]),
];

/// Checks that must pass inside the criteria with known failures.
const CORRECTED: [(usize, &str); 6] = [
    (4, "wedge2 n=4: minimal polynomial roots from the Casimir values"),
    (4, "wedge2 n=5: minimal polynomial roots from the Casimir values"),
    (5, "wedge2 n=4: R' equals RPR - (q^2 + q^-4)R + (1 + q^-2)P"),
    (5, "wedge2 n=4: printed closed form fails (PR + 1)(PR' - 1) = 0"),
    (6, "n=2: degree-3 kernel dimension matches the braided symmetrizer"),
    (6, "n=3: degree-3 kernel dimension matches the braided symmetrizer"),
];

fn check_passes(c: &Criterion, name: &str) -> bool {
    c.report.checks.iter().any(|k| k.name == name && k.passed)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria = run_all().expect("criteria run");
    let known: BTreeMap<usize, &[&str]> = KNOWN.into_iter().collect();
    let mut problems = Vec::new();
    for c in &criteria {
        println!("{}", c.line());
        if c.elapsed > c.budget {
            problems.push(format!("criterion {} over budget", c.id));
        }
        let mut failed: Vec<&str> = c.failures().iter().map(|k| k.name.as_str()).collect();
        failed.sort();
        let mut expected: Vec<&str> = known.get(&c.id).map(|v| v.to_vec()).unwrap_or_default();
        expected.sort();
        if failed != expected {
            problems.push(format!("criterion {}: failing checks {failed:?}, documented {expected:?}", c.id));
        }
    }
    for (id, name) in CORRECTED {
        let c = criteria.iter().find(|c| c.id == id).unwrap();
        if !check_passes(c, name) {
            problems.push(format!("criterion {id}: expected pass for {name}"));
        }
    }

    let tree = Command::new(env!("CARGO_BIN_EXE_qgrow")).args(["tree", "--max-rank", "4"]).output().unwrap();
    let json: serde_json::Value = serde_json::from_slice(&tree.stdout).unwrap();
    let verified = ["B2", "C3", "D4"].iter().all(|to| {
        json["edges"].as_array().unwrap().iter().any(|e| {
            format!("{}{}", e["to"]["series"].as_str().unwrap(), e["to"]["rank"]) == *to && e["status"] == "verified"
        })
    });
    println!("{} tree --max-rank 4: edges A1->B2, A2->C3, A3->D4 verified", if verified { "PASS" } else { "FAIL" });
    if !verified || tree.status.code() != Some(0) {
        problems.push("tree edges".into());
    }
    let all = Command::new(env!("CARGO_BIN_EXE_qgrow")).args(["verify", "--suite", "all"]).output().unwrap();
    println!("     verify --suite all: exit {:?}", all.status.code());
    if all.status.code() != Some(1) {
        problems.push(format!("verify --suite all exited {:?}, documented 1", all.status.code()));
    }

    let passed = criteria.iter().filter(|c| c.passed()).count();
    println!("{passed} of {} criteria pass ({:.2}s total)", criteria.len(), start.elapsed().as_secs_f64());
    if problems.is_empty() {
        println!("failures match the documented discrepancies");
        ExitCode::SUCCESS
    } else {
        for p in &problems {
            println!("UNEXPECTED {p}");
        }
        ExitCode::FAILURE
    }
}
