//! End-to-end checks of the command line surface: exit codes, output
//! formats, file round trips, and reproducibility of the verify runs.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topoindex"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn usage_surface() {
    let help = run(&["--help"]);
    assert!(help.status.success());
    let text = stdout(&help);
    for sub in ["compute", "generate", "enumerate", "extremal", "spectra", "random", "verify", "table"] {
        assert!(text.contains(sub), "help is missing {sub}");
    }
    assert!(run(&["--version"]).status.success());
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["compute", "--spec", "cycle:0", "--index", "M1"]).status.code(), Some(1));
}

#[test]
fn compute_text_output() {
    let out = run(&["compute", "--spec", "greedy:4,3,2,2,1,1,1,1,1", "--index", "M1,W"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("9 vertices, 8 edges"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("M1") && l.ends_with("38")), "{text}");
    assert!(text.lines().any(|l| l.starts_with('W') && l.ends_with("86")), "{text}");
}

#[test]
fn compute_json_output() {
    let out = run(&["compute", "--spec", "greedy:4,3,2,2,1,1,1,1,1", "--index", "SO,M1,W", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["n"], 9);
    let values = doc["values"].as_array().expect("values array");
    let by_name = |name: &str| {
        values
            .iter()
            .find(|v| v["index"] == name)
            .unwrap_or_else(|| panic!("{name} missing"))["value"]
            .as_f64()
            .expect("numeric")
    };
    assert_eq!(by_name("M1"), 38.0);
    assert_eq!(by_name("W"), 86.0);
    assert!((by_name("SO") - 28.864068810953157).abs() < 1e-12);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("values.csv");
    let args = ["compute", "--spec", "complete:5", "--index", "M1,M2", "--format", "csv"];
    let piped = run(&args);
    assert!(piped.status.success());
    let mut to_file: Vec<&str> = args.to_vec();
    let path_str = path.to_str().expect("utf8 path");
    to_file.extend(["--out", path_str]);
    assert!(run(&to_file).status.success());
    assert_eq!(std::fs::read_to_string(&path).expect("wrote file"), stdout(&piped));
}

#[test]
fn generated_edge_list_feeds_compute() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("cycle7.edges");
    let path_str = path.to_str().expect("utf8 path");
    assert!(run(&["generate", "--spec", "cycle:7", "--out", path_str]).status.success());
    let out = run(&["compute", "--graph", path_str, "--index", "M1,W"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("M1") && l.ends_with("28")), "{text}");
    assert!(text.lines().any(|l| l.starts_with('W') && l.ends_with("42")), "{text}");
}

#[test]
fn enumerate_lists_every_order_eight_tree() {
    let out = run(&["enumerate", "--n", "8", "--family", "all"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().filter(|l| l.contains("edges:8:")).count(), 23);
}

#[test]
fn extremal_multiset_and_tree_modes_agree_on_ends() {
    let tree = run(&["extremal", "--n", "8", "--objective", "Hf"]);
    assert!(tree.status.success());
    let tree_text = stdout(&tree);
    assert!(tree_text.contains("min 26"), "{tree_text}");
    assert!(tree_text.contains("max 56"), "{tree_text}");
    let multiset = run(&["extremal", "--n", "8", "--objective", "Hf", "--multiset"]);
    assert!(multiset.status.success());
    let multiset_text = stdout(&multiset);
    assert!(multiset_text.contains("min 26"), "{multiset_text}");
    assert!(multiset_text.contains("max 56"), "{multiset_text}");
}

#[test]
fn verify_exit_codes() {
    let pass = run(&["verify", "--claims", "C1", "--quick"]);
    assert!(pass.status.success());
    assert!(stdout(&pass).contains("VERIFIED"));

    let unknown = run(&["verify", "--claims", "C99", "--quick"]);
    assert_eq!(unknown.status.code(), Some(1));

    // A report-only claim records its violations without gating the run.
    let report_only = run(&["verify", "--claims", "C6", "--quick"]);
    assert!(report_only.status.success());
    assert!(stdout(&report_only).contains("REPORT-ONLY"));
}

#[test]
fn verify_quick_json_is_reproducible() {
    let first = run(&["verify", "--quick", "--format", "json"]);
    assert!(first.status.success());
    let second = run(&["verify", "--quick", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn table_one_reports_agreements_and_differences() {
    let out = run(&["table", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.ends_with("yes")), "{text}");
    assert!(text.lines().any(|l| l.ends_with("NO")), "{text}");
}

#[test]
fn spectra_prints_integer_charpoly() {
    let out = run(&["spectra", "--spec", "complete:4", "--matrix", "adjacency", "--charpoly"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 0 -6 -8 -3"), "{text}");
    assert!(text.contains("energy 6.00000"), "{text}");
}
