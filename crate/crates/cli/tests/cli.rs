use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_straightknot"))
        .args(args)
        .env_remove("STRAIGHTKNOT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn pd_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "{text}").unwrap();
    f
}

const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";

#[test]
fn identify_names_the_trefoil() {
    let f = pd_file(TREFOIL);
    let o = run(&["identify", "--pd", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["name"], "3_1");
}

#[test]
fn identify_misses_exit_one() {
    // W(4, 5) has 15 crossings, beyond the table.
    let w = run(&["family", "weaving", "--n", "4", "--m", "5"]);
    let f = pd_file(stdout(&w).trim());
    let o = run(&["identify", "--pd", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["name"].is_null());
}

#[test]
fn malformed_pd_exits_two() {
    let f = pd_file("[[1,2,3]]");
    let o = run(&["identify", "--pd", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn straight_number_finds_and_draws_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("w.svg");
    let o = run(&[
        "straight-number",
        "--knot",
        "8_18",
        "--max-crossings",
        "10",
        "--threads",
        "2",
        "--witness",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "Found");
    assert_eq!(v["value"], 10);
    let drawing = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches(r#"class="crossing""#).count(), 10);
}

#[test]
fn straight_number_budget_exits_one() {
    let o = run(&["straight-number", "--knot", "8_18", "--max-crossings", "9"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "LowerBoundOnly");
    assert_eq!(v["value"], 9);
}

#[test]
fn straight_number_from_a_pd_file_without_prunes() {
    let f = pd_file(TREFOIL);
    let o = run(&[
        "straight-number",
        "--pd",
        f.path().to_str().unwrap(),
        "--max-crossings",
        "4",
        "--no-prune",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 3);
}

#[test]
fn unknown_knot_exits_two() {
    let o = run(&["straight-number", "--knot", "13_1", "--max-crossings", "13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--crossings", "5", "--shadows-only", "--count"]);
    assert_eq!(stdout(&o).trim(), "21");
    let o = run(&["enumerate", "--crossings", "3", "--count"]);
    assert_eq!(stdout(&o).trim(), "32");
    let o = run(&["enumerate", "--crossings", "2"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.starts_with("2; ")));
}

#[test]
fn weaving_emitters_and_bound() {
    let o = run(&["family", "weaving", "--n", "3", "--m", "4", "--emit", "pd"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches('[').count(), 9);
    let o = run(&[
        "family", "weaving", "--n", "3", "--m", "4", "--emit", "gauss",
    ]);
    assert_eq!(stdout(&o).trim().split(',').count(), 16);
    let o = run(&["bound", "weaving", "--n", "3", "--m", "4", "--brute"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed_form"], 7);
    assert_eq!(v["max_simple_arc"], 6);
    assert_eq!(v["crossings"], 8);
}

#[test]
fn spiral_rejects_wrong_exponent_count() {
    let o = run(&["family", "spiral", "--n", "3", "--m", "2", "--eps", "1,-1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["family", "spiral", "--n", "3", "--m", "2", "--eps", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn twist_insert_turns_the_trefoil_into_5_1() {
    let f = pd_file(TREFOIL);
    let o = run(&[
        "twist",
        "insert",
        "--pd",
        f.path().to_str().unwrap(),
        "--region",
        "0",
        "--full-twists",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = pd_file(stdout(&o).trim());
    let o = run(&["identify", "--pd", g.path().to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["name"], "5_1");
    let o = run(&[
        "twist",
        "insert",
        "--pd",
        f.path().to_str().unwrap(),
        "--region",
        "4",
        "--full-twists",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn template_emitters() {
    let o = run(&["template", "--t", "1,1,2,2,1,1", "--emit", "straight"]);
    assert_eq!(
        stdout(&o).trim(),
        "10; 2 5 8 7 6 1 10 3 4 9; UDUDUDDUDUD; 1010110110"
    );
    let o = run(&["template", "--t", "1,1,2,2,1,1", "--emit", "svg"]);
    assert!(stdout(&o).starts_with("<svg"));
    let o = run(&["template", "--t", "1,1,2,2,1,1"]);
    assert_eq!(stdout(&o).matches('[').count(), 10);
    let o = run(&["template", "--t", "2,1,2,2,1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_subcommands() {
    let o = run(&["verify", "template", "--t", "1,1,2,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["straight_number"], 10);
    assert_eq!(v["name"], "9_32");
    let o = run(&["verify", "weaving", "--n", "3", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_simple_arc"], 8);
    assert_eq!(v["not_perfectly_straight"], true);
    let o = run(&["verify", "weaving", "--n", "3", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn flypes_reports_json() {
    let f = pd_file(TREFOIL);
    let o = run(&["flypes", "--pd", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cuts"].as_array().unwrap().len(), 3);
    assert_eq!(v["nontrivial"], 0);
}

#[test]
fn missing_arguments_exit_two() {
    assert_eq!(
        run(&["straight-number", "--max-crossings", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
}
