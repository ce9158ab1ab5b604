use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trace-ch"))
        .args(args)
        .env_remove("TRACE_CH_MAX_PAIRS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_zero(dir: &Path, n: usize) -> String {
    let row = vec!["\"0\""; n].join(", ");
    let rows = vec![format!("[{row}]"); n].join(", ");
    let path = dir.join(format!("zero{n}.json"));
    fs::write(&path, format!("{{\"n\": {n}, \"entries\": [{rows}]}}")).unwrap();
    path.display().to_string()
}

#[test]
fn verify_generic_two() {
    let out = run(&["verify", "--generic", "2", "--r-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("[holds]").count(), 6);
    assert!(text.contains("summary: 3/3 identities hold"));
}

#[test]
fn verify_zero_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_zero(dir.path(), 3);
    let out = run(&["verify", "--matrix", &path, "--r-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_random_batch() {
    let out = run(&["verify", "--random", "--n", "4", "--count", "25", "--r-max", "6", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("summary: 150/150 identities hold"));
}

#[test]
fn verify_json_reports() {
    let out = run(&["verify", "--generic", "2", "--r-max", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["all_hold"], true);
    let reports = doc["inputs"][0]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for rep in reports {
        assert_eq!(rep["lhs"], "0");
        assert_eq!(rep["holds"], true);
        for key in ["n", "r", "branch", "terms"] {
            assert!(rep.get(key).is_some());
        }
    }
    assert_eq!(reports[1]["terms"][2]["expr"], "2ad - 2bc");
}

#[test]
fn enumerate_listings() {
    let out = run(&["enumerate", "lsd", "--generic", "2", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines, ["(1)(2) sign=+1 weight=ad", "(1 2) sign=-1 weight=bc", "ℓ_2 = ad - bc"]);

    let out = run(&["enumerate", "walks", "--generic", "2", "--k", "3"]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains("weight=")).count(), 8);
    assert!(text.contains("1→1→2→1 weight=abc"));
    assert!(text.ends_with("c_3 = a^3 + 3abc + 3bcd + d^3\n"));

    let out = run(&["enumerate", "lsd", "--generic", "2", "--r", "0"]);
    assert_eq!(stdout(&out), "∅ sign=+1 weight=1\nℓ_0 = 1\n");
}

#[test]
fn involution_summaries() {
    let out = run(&["involution", "--generic", "2", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("BAD pairs: all cancel; GOOD pairs: 0\n"));

    let out = run(&["involution", "--generic", "2", "--r", "2", "--show-pairs"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("GOOD group from (1)(2): 2 pairs, weight -2ad"));
    assert!(text.contains("GOOD group from (1 2): 2 pairs, weight 2bc"));
    assert!(text.contains("BAD (1→1, (1)) [BAD scenario 1 (t=0, y=1)] W=-a^2  ->  (1→1→1, ∅) W=a^2"));

    let dir = tempfile::tempdir().unwrap();
    let path = write_zero(dir.path(), 2);
    let out = run(&["involution", "--matrix", &path, "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 pairs"));
}

#[test]
fn involution_dot_pictures() {
    let out = run(&["involution", "--generic", "2", "--r", "3", "--dot"]);
    let text = stdout(&out);
    // 20 BAD pairs form 10 orbits
    assert_eq!(text.matches("digraph Pair {").count(), 10);
    assert_eq!(text.matches("subgraph cluster_after").count(), 10);
}

#[test]
fn export_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("figs");
    let out = run(&["export-dot", "--generic", "2", "--r", "2", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let digraph = fs::read_to_string(out_dir.join("digraph.dot")).unwrap();
    assert_eq!(digraph.matches("->").count(), 4);
    for arc in ["1 -> 1 [label=\"a\"]", "1 -> 2 [label=\"b\"]", "2 -> 1 [label=\"c\"]", "2 -> 2 [label=\"d\"]"] {
        assert!(digraph.contains(arc), "{arc}");
    }
    let mut names: Vec<_> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.iter().filter(|n| n.starts_with("lsd_")).count(), 2);
    assert_eq!(names.iter().filter(|n| n.starts_with("pair_")).count(), 2);

    let zero = write_zero(dir.path(), 2);
    let zdir = dir.path().join("zero");
    run(&["export-dot", "--matrix", &zero, "--out", zdir.to_str().unwrap()]);
    let dot = fs::read_to_string(zdir.join("digraph.dot")).unwrap();
    assert!(!dot.contains("->"));
    assert_eq!(dot.matches("[label=\"v").count(), 2);
}

#[test]
fn charpoly_table() {
    let out = run(&["charpoly", "--generic", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("1 | -a - d | a + d | -a - d | a + d"));
    assert!(text.contains("2 | ad - bc | ad - bc | ad - bc | a^2 + 2bc + d^2"));

    let out = run(&["charpoly", "--generic", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["consistent"], true);
    assert_eq!(doc["inputs"][0]["rows"][0]["c"], "a_1_1 + a_2_2 + a_3_3 + a_4_4");
}

#[test]
fn output_is_deterministic() {
    let args: [&[&str]; 3] = [
        &["verify", "--random", "--n", "3", "--count", "5", "--seed", "9", "--format", "json"],
        &["involution", "--generic", "3", "--r", "3", "--show-pairs"],
        &["charpoly", "--random", "--n", "4", "--seed", "3"],
    ];
    for a in args {
        assert_eq!(run(a).stdout, run(a).stdout, "{a:?}");
    }
    let a = run(&["verify", "--random", "--n", "3", "--seed", "1"]).stdout;
    let b = run(&["verify", "--random", "--n", "3", "--seed", "2"]).stdout;
    assert_ne!(a, b);
}

#[test]
fn bad_input_and_caps_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"n": 2, "entries": [["a", "b"], ["c"]]}"#).unwrap();
    let out = run(&["verify", "--matrix", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    fs::write(&bad, r#"{"n": 2, "entries": [["a", "b+"], ["c", "d"]]}"#).unwrap();
    let out = run(&["verify", "--matrix", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    assert_eq!(run(&["verify", "--matrix", "/nonexistent/m.json"]).status.code(), Some(2));
    assert_eq!(run(&["involution", "--generic", "5", "--r", "2"]).status.code(), Some(2));
    assert_eq!(run(&["involution", "--generic", "2", "--r", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--generic", "7"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "walks", "--generic", "2", "--k", "11"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "walks", "--generic", "2", "--k", "11", "--force"]).status.code(), Some(0));
}

#[test]
fn pair_cap_from_environment() {
    let capped = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_trace-ch"))
            .args(["involution", "--generic", "2", "--r", "3", "--force"])
            .env("TRACE_CH_MAX_PAIRS", cap)
            .output()
            .unwrap()
    };
    let out = capped("19");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("20 pairs"));
    assert_eq!(capped("20").status.code(), Some(0));
}
