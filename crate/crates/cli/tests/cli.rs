use std::fs;
use std::process::{Command, Output};

fn convexkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_convexkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn claw_intervals() {
    let out = convexkit(&["interval", "--graph", "star:3", "--kind", "wt", "--u", "1", "--v", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1 2 3\n");
    let out = convexkit(&["interval", "--graph", "star:3", "--kind", "toll", "--u", "1", "--v", "2"]);
    assert_eq!(stdout(&out), "0 1 2\n");
    let out = convexkit(&["interval", "--graph", "star:3", "--u", "0", "--v", "2"]);
    assert_eq!(stdout(&out), "0 2\n");
}

#[test]
fn interval_report_on_bridge() {
    let out = convexkit(&["interval", "--graph", "bridge:3", "--u", "1", "--v", "5", "--report"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "0 1 3 4 5");
    assert_eq!(lines[1], "outside: 2 6");
    assert_eq!(lines[2], "outside_u: 2");
    assert_eq!(lines[3], "outside_v: 6");
}

#[test]
fn product_interval_shows_labels() {
    let out = convexkit(&[
        "interval", "--product", "lex", "--g", "path:3", "--h", "path:3", "--u", "0", "--v", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.contains('\t')));
    assert!(text.contains("0\t(0,0)"));
}

#[test]
fn invariants() {
    let out = convexkit(&["invariant", "--graph", "complete:5", "--what", "wtn"]);
    assert_eq!(stdout(&out), "5\n");
    let out = convexkit(&["invariant", "--graph", "bridge:3", "--what", "wtn", "--witness"]);
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "4");
    assert_eq!(lines[1].split(' ').count(), 4);
    let out = convexkit(&["invariant", "--graph", "path:6", "--what", "wth"]);
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn graph_files_and_graph6_strings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.txt");
    fs::write(&path, "# a small tree\n4 3\n0 1\n1 2\n1 3\n").unwrap();
    let out = convexkit(&["invariant", "--graph", path.to_str().unwrap(), "--what", "wtn"]);
    assert_eq!(stdout(&out), "2\n");
    // graph6 for the path on 3 vertices
    let out = convexkit(&["hull", "--graph", "Bg", "--set", "0,2"]);
    assert_eq!(stdout(&out), "0 1 2\n");
}

#[test]
fn product_files() {
    let dir = tempfile::tempdir().unwrap();
    let lex = dir.path().join("lex.txt");
    let out = convexkit(&["product", "--kind", "lex", "--g", "path:3", "--h", "path:3", "--out", lex.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(&lex).unwrap();
    assert!(text.contains("# 4 (1,1)"));
    let out = convexkit(&["invariant", "--graph", lex.to_str().unwrap(), "--what", "wtn"]);
    assert_eq!(stdout(&out), "2\n");

    let out = convexkit(&["product", "--kind", "corona", "--g", "path:3", "--h", "path:3", "--format", "graph6"]);
    let g6 = stdout(&out);
    assert_eq!(g6.trim().len(), 1 + (12 * 11 / 2usize).div_ceil(6));

    let dot = dir.path().join("c.dot");
    let out = convexkit(&[
        "export", "--product", "corona", "--g", "path:2", "--h", "path:2", "--dot", dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.contains("label=\"g_0\"") && text.contains("label=\"h_1^1\""));

    let out = convexkit(&["product", "--kind", "gcorona", "--g", "path:2", "--h", "path:3", "--h", "complete:1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("6 7\n"));
}

#[test]
fn bad_input_fails_with_message() {
    let out = convexkit(&["interval", "--graph", "path:3", "--u", "0", "--v", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = convexkit(&["invariant", "--graph", "nonsense:3", "--what", "wtn"]);
    assert_eq!(out.status.code(), Some(2));
    let out = convexkit(&["product", "--kind", "lex", "--g", "path:3", "--h", "path:2", "--h", "path:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_suite() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.toml");
    fs::write(&spec, "interval_instances = 5\ninvariant_pairs = 7\n").unwrap();
    let report = dir.path().join("report.jsonl");
    let csv = dir.path().join("summary.csv");
    let out = convexkit(&[
        "verify",
        "--suite",
        "corona-wtn",
        "--spec",
        spec.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = fs::read_to_string(&report).unwrap();
    assert!(lines.lines().count() >= 7);
    assert!(lines.lines().all(|l| l.contains("\"check\":\"corona-wtn\"")));
    assert!(fs::read_to_string(&csv).unwrap().starts_with("check,total"));
    assert!(stdout(&out).contains("0 mismatch"));

    let out = convexkit(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    fs::write(&spec, "random_orders = [30]\n").unwrap();
    let out = convexkit(&["verify", "--suite", "oracle-wt", "--spec", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_lists_and_prints_spec() {
    let out = convexkit(&["verify", "--list"]);
    assert!(stdout(&out).lines().any(|l| l == "corona-mixed"));
    let out = convexkit(&["verify", "--print-spec"]);
    assert!(stdout(&out).contains("walk_budget_extra = 2"));
}
