use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tri-extremal"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn json_matches_golden_files() {
    let cases = [
        ("max-triangle", "square.txt", "square.max.json"),
        ("list-3stable", "square.txt", "square.3stable.json"),
        ("min-enclosing", "square.txt", "square.enclosing.json"),
        ("max-triangle", "triangle.txt", "triangle.max.json"),
        ("min-enclosing", "rational.txt", "rational.enclosing.json"),
    ];
    for (cmd, input, expected) in cases {
        let out = run(&[cmd, golden(input).to_str().unwrap(), "--json"]);
        assert!(out.status.success(), "{cmd} {input}");
        let want = std::fs::read_to_string(golden(expected)).unwrap();
        assert_eq!(stdout(&out), want, "{cmd} {input}");
    }
}

#[test]
fn square_answers() {
    let sq = golden("square.txt");
    let sq = sq.to_str().unwrap();
    let max = json(&run(&["max-triangle", sq, "--json"]));
    assert_eq!(max["result"]["area"], "1/2");
    let stable = json(&run(&["list-3stable", sq, "--json"]));
    assert_eq!(stable["result"]["count"], 4);
    let enclosing = json(&run(&["min-enclosing", sq, "--json"]));
    assert_eq!(enclosing["result"]["area"], "2");
    let tri = json(&run(&["max-triangle", golden("triangle.txt").to_str().unwrap(), "--json"]));
    assert_eq!(tri["result"]["triangle"], serde_json::json!([0, 1, 2]));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("p.txt");
    assert!(run(&["gen", "--n", "300", "--seed", "9", "--out", poly.to_str().unwrap()]).status.success());
    for cmd in ["max-triangle", "list-3stable", "list-g3stable", "min-enclosing"] {
        let mut outputs = Vec::new();
        for k in 0..2 {
            let trace = dir.path().join(format!("{cmd}.{k}.jsonl"));
            let mut args = vec![cmd, poly.to_str().unwrap(), "--json"];
            if cmd != "max-triangle" {
                args.extend(["--trace", trace.to_str().unwrap()]);
            }
            let out = run(&args);
            assert!(out.status.success(), "{cmd}");
            let trace = std::fs::read(&trace).unwrap_or_default();
            outputs.push((out.stdout, trace));
        }
        assert_eq!(outputs[0], outputs[1], "{cmd}");
    }
}

#[test]
fn traces_are_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let sq = golden("square.txt");
    let trace = dir.path().join("t.jsonl");
    let out = run(&["list-3stable", sq.to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&trace).unwrap();
    let mut reported = std::collections::BTreeSet::new();
    for line in text.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["B", "C", "A", "decision", "reported"] {
            assert!(rec.get(key).is_some(), "{line}");
        }
        assert!(rec["decision"] == "KillB" || rec["decision"] == "KillC");
        for t in rec["reported"].as_array().unwrap() {
            reported.insert(t.to_string());
        }
    }
    assert_eq!(reported.len(), 4);
}

#[test]
fn svg_has_one_frame_per_step_and_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("p.txt");
    assert!(run(&["gen", "--n", "12", "--seed", "3", "--bound", "100", "--out", poly.to_str().unwrap()]).status.success());
    for cmd in ["list-3stable", "list-g3stable", "min-enclosing"] {
        let (svg, trace) = (dir.path().join("f.svg"), dir.path().join("f.jsonl"));
        let out = run(&[cmd, poly.to_str().unwrap(), "--svg", svg.to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
        assert!(out.status.success(), "{cmd}");
        let svg = std::fs::read_to_string(&svg).unwrap();
        assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
        let steps = std::fs::read_to_string(&trace).unwrap().lines().count();
        assert_eq!(svg.matches("<g transform").count(), steps + 1, "{cmd}");
    }
}

#[test]
fn counterclockwise_input_reports_input_indices() {
    let dir = tempfile::tempdir().unwrap();
    let ccw = dir.path().join("ccw.txt");
    std::fs::write(&ccw, "0 0\n4 0\n5 2\n0 3\n").unwrap();
    let out = json(&run(&["max-triangle", ccw.to_str().unwrap(), "--json"]));
    assert_eq!(out["result"]["area"], "15/2");
    let idx: Vec<usize> = serde_json::from_value(out["result"]["triangle"].clone()).unwrap();
    let mut sorted = idx.clone();
    sorted.sort();
    assert_eq!(sorted, vec![0, 2, 3]);
    let verts = out["result"]["vertices"].as_array().unwrap().clone();
    for p in [["0", "0"], ["5", "2"], ["0", "3"]] {
        assert!(verts.contains(&serde_json::json!(p)));
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 0\n1 1\n2 2\n").unwrap();
    assert_eq!(run(&["max-triangle", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, "0 0\n1 x\n2 0\n").unwrap();
    let out = run(&["list-3stable", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["max-triangle", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--n", "ten"]).status.code(), Some(2));
    assert_eq!(run(&["bench", "--sizes", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn gen_is_deterministic_and_valid() {
    let a = run(&["gen", "--n", "50", "--seed", "4", "--bound", "1000"]);
    let b = run(&["gen", "--n", "50", "--seed", "4", "--bound", "1000"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 50);
    let poly: tri_extremal::IntPolygon = tri_extremal::parse_polygon(&text).unwrap();
    assert!(poly.vertices().iter().all(|v| v.x.abs() <= 1000 && v.y.abs() <= 1000));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin()
        .args(["max-triangle", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0 0\n0 1\n1 1\n1 0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)["result"]["area"], "1/2");
}

#[test]
fn verify_passes_and_is_order_independent() {
    let one = bin().args(["verify", "--n-max", "14", "--cases", "24", "--seed", "5"]).env("TRI_EXTREMAL_THREADS", "1").output().unwrap();
    let four = bin().args(["verify", "--n-max", "14", "--cases", "24", "--seed", "5"]).env("TRI_EXTREMAL_THREADS", "4").output().unwrap();
    assert!(one.status.success(), "{}", stdout(&one));
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    for mode in ["max", "3stable", "g3stable", "enclosing"] {
        assert!(text.contains(&format!("{mode}: 24/24 passed")), "{text}");
    }
    let bad_env = bin().args(["verify", "--cases", "1"]).env("TRI_EXTREMAL_THREADS", "many").output().unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn bench_reports_counters_and_ratios() {
    let out = run(&["bench", "--sizes", "2*10^3,4e3", "--seed", "2", "--reps", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("adv/n") && text.contains("3-stable time"), "{text}");
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .take(2)
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    for r in &rows {
        assert!(r[2] <= 6.0, "3-stable advances per vertex {}", r[2]);
        assert!(r[5] <= 12.0, "generalized advances per vertex {}", r[5]);
    }
}
