use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_gridfree");

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN).args(args).current_dir(dir).output().expect("running gridfree")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn construct_writes_points_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["construct", "--config", "nd-parallelogram", "--n", "100", "--out", "l.pts"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "199");
    let text = fs::read_to_string(dir.path().join("l.pts")).unwrap();
    assert_eq!(text.lines().count(), 199);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("l.json")).unwrap()).unwrap();
    assert_eq!(report["manifest"]["command"], "construct");
    assert_eq!(report["manifest"]["arguments"]["n"], "100");
    assert_eq!(report["report"]["final_size"], 199);
    assert_eq!(report["report"]["verified"], true);

    let out = run(dir.path(), &["verify", "--config", "nd-parallelogram", "--in", "l.pts"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seeded_rhombus_construction_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["construct", "--config", "rhombus", "--n", "256", "--seed", "7", "--out", "r.pts"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = run(dir.path(), &["verify", "--config", "rhombus", "--in", "r.pts"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["manifest"]["seed"], 7);
    assert_eq!(report["report"]["seed"], 7);
}

#[test]
fn rectangle_free_at_seven() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["construct", "--config", "axis-rectangle", "--n", "7", "--out", "z.pts"]);
    assert_eq!(stdout(&out).trim(), "21");
}

#[test]
fn verify_reports_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.pts"), "1 1\n1 2\n2 1\n2 2\n").unwrap();
    let out = run(dir.path(), &["verify", "--config", "axis-square", "--in", "g.pts"]);
    assert_eq!(out.status.code(), Some(1));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, ["1 1", "1 2", "2 1", "2 2"]);
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.pts"), "1 1\n3 x\n").unwrap();
    let out = run(dir.path(), &["verify", "--config", "rhombus", "--in", "bad.pts"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error line 2"), "{}", stderr(&out));
    let out = run(dir.path(), &["verify", "--config", "rhombus", "--in", "missing.pts"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(dir.path(), &["construct", "--config", "corner", "--n", "5", "--out", "c.pts"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_methods_agree_and_append_csv() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("tri.pts"), "0 0\n2 0\n1 5\n").unwrap();
    let out = run(dir.path(), &["count", "--config", "isosceles", "--in", "tri.pts", "--csv", "c.csv"]);
    assert_eq!(stdout(&out).trim(), "1");

    let grid: String = (1..=5).flat_map(|x| (1..=5).map(move |y| format!("{x} {y}\n"))).collect();
    fs::write(dir.path().join("base.pts"), grid).unwrap();
    let fast = run(dir.path(), &["count", "--config", "rhombus", "--in", "base.pts", "--method", "fast", "--csv", "c.csv"]);
    let brute = run(dir.path(), &["count", "--config", "rhombus", "--in", "base.pts", "--method", "brute"]);
    assert_eq!(stdout(&fast), stdout(&brute));

    let csv = fs::read_to_string(dir.path().join("c.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "class,n,param_g,seed,size,verified,elapsed_ms");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("isosceles,"));
}

#[test]
fn pyth_counts_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["pyth", "--n", "5"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = run(dir.path(), &["pyth", "--n", "5", "--list"]);
    assert_eq!(stdout(&out), "3 4 5\n4 3 5\n2\n");
}

#[test]
fn exact_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["exact", "--config", "nd-parallelogram", "--n", "4", "--out", "e.pts"]);
    assert_eq!(stdout(&out).trim(), "7");
    assert_eq!(fs::read_to_string(dir.path().join("e.pts")).unwrap().lines().count(), 7);

    let out = run(dir.path(), &["table", "--config", "3-collinear", "--n-list", "2,3,4", "--csv", "t.csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2 4\n3 6\n4 8\n");
    let csv = fs::read_to_string(dir.path().join("t.csv")).unwrap();
    let sizes: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(sizes, ["4", "6", "8"]);
}

#[test]
fn guards_and_budgets_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["exact", "--config", "rhombus", "--n", "9"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(dir.path(), &["exact", "--config", "3-collinear", "--n", "6", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(dir.path(), &["construct", "--config", "rhombus", "--n", "5000", "--out", "r.pts"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn render_draws_one_marker_per_point() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["construct", "--config", "nd-parallelogram", "--n", "30", "--out", "l.pts"]);
    let out = run(dir.path(), &["render", "--in", "l.pts", "--svg", "l.svg"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(dir.path().join("l.svg")).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<circle").count(), 59);
}

#[test]
fn thread_count_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(BIN)
        .args(["pyth", "--n", "5"])
        .env("GRIDFREE_THREADS", "lots")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(BIN)
        .args(["pyth", "--n", "5"])
        .env("GRIDFREE_THREADS", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "2");
}
