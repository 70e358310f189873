use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn problem(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "problems", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run_with(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reembed")).env("REEMBED_THREADS", threads).args(args).output().unwrap()
}

fn run(args: &[&str]) -> Output {
    run_with("1", args)
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn invocations() -> Vec<Vec<String>> {
    let cases: Vec<(&str, &str, Vec<&str>)> = vec![
        ("sep-indets", "two_degree_family.txt", vec![]),
        ("find-sep", "two_parameter.txt", vec!["--z", "x,y", "--coherent"]),
        ("eliminate", "one_parameter_elimination.txt", vec!["--z", "x,y", "--oracle"]),
        ("best-reembed", "three_best_tuples.txt", vec!["--degree", "2", "--all"]),
        ("best-reembed", "two_degree_family.txt", vec![]),
        ("fiber", "two_degree_family.txt", vec!["--report"]),
        ("fiber", "two_parameter.txt", vec!["--generic"]),
        ("ump-reembed", "two_block_family.txt", vec!["--k", "2"]),
        ("free-reembed", "regular_two_parameter.txt", vec![]),
        ("free-reembed", "regular_one_parameter.txt", vec![]),
        ("smooth-check", "regular_two_parameter.txt", vec![]),
    ];
    cases
        .into_iter()
        .map(|(cmd, file, extra)| {
            let mut v = vec![cmd.to_string(), problem(file)];
            v.extend(extra.into_iter().map(String::from));
            v
        })
        .collect()
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    for args in invocations() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_with("1", &args);
        assert!(first.status.success(), "{args:?}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(first.stdout, run_with("1", &args).stdout, "{args:?}");
        assert_eq!(first.stdout, run_with("4", &args).stdout, "{args:?}");
        let mut j = args.clone();
        j.extend(["--format", "json"]);
        assert_eq!(run_with("1", &j).stdout, run_with("3", &j).stdout, "{args:?}");
    }
}

#[test]
fn json_reports_share_a_schema() {
    for args in invocations() {
        let mut args: Vec<&str> = args.iter().map(String::as_str).collect();
        args.extend(["--format", "json"]);
        let v = json(&run(&args));
        assert_eq!(v["command"], args[0]);
        assert_eq!(v["input_hash"].as_str().unwrap().len(), 64);
        assert!(v["result"].is_object());
        assert!(v["verifications"].is_array());
    }
}

#[test]
fn input_hash_tracks_the_file_contents() {
    let a = json(&run(&["smooth-check", &problem("regular_two_parameter.txt"), "--format", "json"]));
    let b = json(&run(&["smooth-check", &problem("regular_one_parameter.txt"), "--format", "json"]));
    assert_ne!(a["input_hash"], b["input_hash"]);
}

#[test]
fn elimination_prints_the_generator() {
    let out = text(&run(&["eliminate", &problem("one_parameter_elimination.txt"), "--z", "x,y", "--tuple"]));
    assert!(out.contains("rewritten generators: (0, -3*a^6*w^2 + 3*a^3*w^2, a^5*w^2 - a^2*w^2)"));
    assert!(out.contains("minimal generators: (a^5*w^2 - a^2*w^2)"));
    assert!(out.contains("optimality: optimal-by-linpart"));
    let ungraded = text(&run(&["eliminate", &problem("ungraded_pair.txt"), "--z", "x", "--tuple", "--oracle"]));
    assert!(ungraded.contains("-y^2 + y"));
    assert!(ungraded.contains("optimality: inconclusive"));
}

#[test]
fn three_best_pairs() {
    let v = json(&run(&["best-reembed", &problem("three_best_tuples.txt"), "--degree", "2", "--all", "--format", "json"]));
    let mut zs: Vec<Vec<String>> = v["result"]["tuples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let mut z: Vec<String> = t["z"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
            z.sort();
            z
        })
        .collect();
    zs.sort();
    assert_eq!(zs, vec![vec!["w", "y"], vec!["x", "y"], vec!["y", "z"]]);
}

#[test]
fn no_separating_indeterminates_is_not_an_error() {
    let out = run(&["sep-indets", &problem("no_linear_generators.txt")]);
    assert!(out.status.success());
    assert_eq!(text(&out), "separating indeterminates: []\n");
}

#[test]
fn refusals_exit_with_two() {
    let out = run(&["find-sep", &problem("three_best_tuples.txt"), "--z", "x,w"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z is not separating for I"));
    let out = run(&["best-reembed", &problem("three_best_tuples.txt"), "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["free-reembed", &problem("not_unimodular.txt"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().starts_with("NOT_UNIMODULAR"));
}

#[test]
fn usage_and_parse_errors_exit_with_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["eliminate", &problem("two_parameter.txt")]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["sep-indets", "/nonexistent/file.txt"]).status.code(), Some(1));
    assert_eq!(run(&["eliminate", &problem("two_parameter.txt"), "--z", "q"]).status.code(), Some(1));
    assert_eq!(run(&["best-reembed", &problem("two_parameter.txt"), "--all"]).status.code(), Some(1));
    assert_eq!(run_with("0", &["sep-indets", &problem("two_parameter.txt")]).status.code(), Some(1));
}

#[test]
fn matrix_completion_from_a_file() {
    let out = text(&run(&["ump-solve", "--matrix", &problem("univariate_row.txt")]));
    assert!(out.starts_with("completion of A (euclid):\n  [1, -x]\n  [-x, x^2 + 1]\n"));
}

#[test]
fn fixtures_reproduce_the_printed_blocks() {
    let v = json(&run(&[
        "ump-reembed",
        &problem("two_block_family.txt"),
        "--k",
        "2",
        "--fixture",
        &problem("two_block_fixtures.txt"),
        "--format",
        "json",
    ]));
    let blocks = v["result"]["blocks"].as_array().unwrap();
    assert!(blocks.iter().filter(|b| b["degree"] != 1).all(|b| b["provenance"] == "fixture"));
    assert_eq!(v["result"]["target"]["ring"], "Q[a,x1,x3,x4,x6]");
    let free = text(&run(&[
        "free-reembed",
        &problem("regular_two_parameter.txt"),
        "--fixture",
        &problem("regular_two_parameter_fixtures.txt"),
    ]));
    assert!(free.contains("P/I is isomorphic to Q[a1,a2,x2,x3,x5] with weights [0, 0, 1, 1, 2]"));
}

#[test]
fn fiber_reports() {
    let out = text(&run(&["fiber", &problem("two_degree_family.txt"), "--point", "1", "--report"]));
    assert!(out.contains("cotangent dimension: ambient 2, fiber 1"));
    assert!(out.contains("local ring at the point: singular"));
    let out = text(&run(&["fiber", &problem("regular_two_parameter.txt"), "--point", "-1,1/2", "--report"]));
    assert!(out.contains("local ring at the point: regular"));
    assert!(out.contains("fiber is isomorphic to Q[x2,x3,x5]"));
}

#[test]
fn grading_detection() {
    assert_eq!(text(&run(&["detect-grading", &problem("circle.txt")])), "only trivial\n");
    let out = text(&run(&["detect-grading", &problem("regular_one_parameter.txt")]));
    assert!(out.starts_with("grading ["));
}
