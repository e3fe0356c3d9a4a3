use std::process::{Command, Output};

fn finlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finlift"))
        .args(args)
        .env_remove("FINLIFT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = finlift(&all);
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn parse_sierpinski() {
    let o = finlift(&["parse", "{o->c}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 points, 1 arrow\n"));
    let j = json(&["parse", "{o->c}"]);
    assert_eq!(j["points"], 2);
    assert_eq!(j["arrows"], 1);
}

#[test]
fn parse_reports_t0() {
    let o = finlift(&["parse", "{a<->b}"]);
    assert!(stdout(&o).contains("T0=false"));
    assert!(stdout(&finlift(&["parse", "{o->c}"])).contains("T0=true"));
}

#[test]
fn parse_error_has_caret() {
    let o = finlift(&["parse", "{a->"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("{a->\n    ^"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(finlift(&["lift", "{} => {*}"]).status.code(), Some(2));
    assert_eq!(finlift(&["orth", "--seed", "{} => {*}", "--word", "rx"]).status.code(), Some(2));
    assert_eq!(finlift(&["spaces", "--size", "6"]).status.code(), Some(2));
    assert_eq!(finlift(&["verify", "--universe", "5"]).status.code(), Some(2));
}

#[test]
fn lift_surjection() {
    let o = finlift(&["lift", "{} => {*}", "{a,b} => {a=b}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn lift_failure_prints_square() {
    let o = finlift(&["lift", "{} => {*}", "{a} => {a,b}"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("fails"));
    assert!(out.contains("bottom (cod f -> cod g): * |-> b"), "{out}");
    let j = json(&["lift", "{} => {*}", "{a} => {a,b}"]);
    assert_eq!(j["holds"], false);
    assert_eq!(j["counterexample"]["bottom"]["assignment"], serde_json::json!([1]));
}

#[test]
fn lift_t0_sierpinski() {
    let o = finlift(&["lift", "{x<->y} => {x=y}", "{o->c} => {*}"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn orth_surjections() {
    let j = json(&["orth", "--seed", "{} => {*}", "--word", "r", "--universe", "3"]);
    assert_eq!(j["word"], "r");
    assert_eq!(j["universe"], 3);
    assert_eq!(j["exactness"], "exact");
    let members = j["members"].as_array().unwrap();
    assert!(!members.is_empty());
    for m in members {
        let hit: std::collections::BTreeSet<u64> =
            m["assignment"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
        assert_eq!(hit.len(), m["cod"]["points"].as_array().unwrap().len(), "{}", m["literal"]);
    }
}

#[test]
fn orth_double_left_is_isomorphisms() {
    let j = json(&["orth", "--seed", "{} => {*}", "--word", "ll", "--universe", "3"]);
    let members = j["members"].as_array().unwrap();
    // one identity per space of size <= 3
    assert_eq!(members.len(), 1 + 1 + 3 + 9);
    for m in members {
        assert_eq!(m["dom"], m["cod"]);
        let a: Vec<u64> = m["assignment"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
        assert_eq!(a, (0..a.len() as u64).collect::<Vec<_>>());
    }
    let out = stdout(&finlift(&["orth", "--seed", "{} => {*}", "--word", "ll", "--universe", "3"]));
    assert!(out.contains("members: 14"));
}

#[test]
fn orth_truncated_word_check() {
    let o = finlift(&[
        "orth",
        "--seed",
        "{o} => {o->c}",
        "--word",
        "r,<5,l,r",
        "--universe",
        "4",
        "--check",
        "{o->c} => {*}",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("member=true"));
    assert!(out.contains("relative-approximation"));
    assert!(out.contains("necessary-condition"));
    assert!(out.contains("compact-hausdorff-truncated: exactness: finite-trivial"));
}

#[test]
fn spaces_counts() {
    for (n, count) in [(0, 1), (2, 3), (4, 33)] {
        let j = json(&["spaces", "--size", &n.to_string()]);
        assert_eq!(j["count"], count);
    }
    let j = json(&["spaces", "--size", "3", "--list"]);
    assert_eq!(j["spaces"].as_array().unwrap().len(), 9);
}

fn classify_row(out: &str, name: &str) -> String {
    out.lines()
        .find(|l| l.split_whitespace().next() == Some(name))
        .unwrap_or_else(|| panic!("no row {name}"))
        .split_whitespace()
        .nth(1)
        .unwrap()
        .to_owned()
}

#[test]
fn classify_maps() {
    let out = stdout(&finlift(&["classify", "{c} => {o->c}", "--universe", "3"]));
    assert_eq!(classify_row(&out, "dense-image"), "false");
    assert_eq!(classify_row(&out, "injective"), "true");
    assert_eq!(classify_row(&out, "induced-topology"), "true");
    let out = stdout(&finlift(&["classify", "{o} => {o->c}", "--universe", "3"]));
    assert_eq!(classify_row(&out, "dense-image"), "true");
    let out = stdout(&finlift(&["classify", "{} => {*}", "--universe", "3"]));
    assert_eq!(classify_row(&out, "surjective"), "false");
}

#[test]
fn classify_space() {
    let j = json(&["classify", "{o->c}", "--universe", "3"]);
    let rows = j["properties"].as_array().unwrap();
    let t0 = rows.iter().find(|r| r["property"] == "t0").unwrap();
    assert_eq!(t0["holds"], true);
    assert_eq!(t0["exactness"], "exact");
    let compact = rows.iter().find(|r| r["property"] == "compact-hausdorff").unwrap();
    assert_eq!(compact["exactness"], "finite-trivial");
}

#[test]
fn verify_catalogue_universe_three() {
    let o = finlift(&["verify", "--universe", "3", "--suite", "catalogue"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_urysohn_universe_four() {
    let o = finlift(&["verify", "--universe", "4", "--suite", "urysohn"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS urysohn"));
}

#[test]
fn verify_ultrafilter_universe_four() {
    let j = json(&["verify", "--universe", "4", "--suite", "ultrafilter"]);
    assert_eq!(j["passed"], true);
    assert_eq!(j["suites"][0]["suite"], "ultrafilter");
    assert!(j["suites"][0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn cache_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["classify", "{a->b}", "--universe", "2"];
    let first = Command::new(env!("CARGO_BIN_EXE_finlift"))
        .args(args)
        .env("FINLIFT_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    let file = dir.path().join("lifting.txt");
    let stored = std::fs::read_to_string(&file).unwrap();
    assert!(stored.starts_with(finlift_core::lifting::CACHE_FORMAT));
    assert!(stored.lines().count() > 1);
    let second = finlift(&[&args[..], &["--cache-dir", dir.path().to_str().unwrap()]].concat());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), stored);
}

#[test]
fn jobs_flag_keeps_output_stable() {
    let a = finlift(&["verify", "--universe", "3", "--jobs", "1"]);
    let b = finlift(&["verify", "--universe", "3", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
