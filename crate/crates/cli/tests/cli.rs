use std::collections::HashSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn thompson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thompson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = thompson(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn length_of_f2() {
    assert_eq!(stdout(&["len", "ABaaaaBAA"]), "9\n");
    assert_eq!(
        stdout(&["len", "x0^-1 x1^-1 x0^4 x1^-1 x0^-1 x0^-1"]),
        "9\n"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&["len", "--json", "aB"])).unwrap();
    assert_eq!(v["length"], 2);
}

#[test]
fn eval_identity() {
    let out = stdout(&["eval", ""]);
    assert!(out.starts_with("key    0|0\n"), "{out}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["eval", "--json", "a"])).unwrap();
    assert_eq!(v["domain"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_input_exits_nonzero() {
    let out = thompson(&["len", "abx"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error at 2"));
    assert!(!thompson(&["trace", "ab", "--track", "01,2"])
        .status
        .success());
    assert!(!thompson(&["family-verify", "-k", "1"]).status.success());
}

#[test]
fn family_verify_k2() {
    let out = stdout(&["family-verify", "-k", "2"]);
    assert!(out.ends_with("all items pass\n"), "{out}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "family-verify",
        "-k",
        "3",
        "--json",
        "--no-geodesic",
    ]))
    .unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["items"].as_array().unwrap().len(), 7);
}

#[test]
fn trace_schema() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["trace", "ABaaaaBAA", "-k", "2"])).unwrap();
    assert_eq!(v["word"], "ABaaaaBAA");
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 10);
    assert!(steps[0]["letter"].is_null());
    assert_eq!(steps[1]["letter"], "A");
    assert_eq!(steps[0]["C"], serde_json::json!({"L": 2, "R": 1, "I": 0}));
    assert_eq!(steps[0]["d"]["00"], 3);
    let times: Vec<u64> = v["events"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["time"].as_u64().unwrap())
        .collect();
    assert_eq!(times, [2, 7]);

    let custom: serde_json::Value =
        serde_json::from_str(&stdout(&["events", "B", "--track", "[1/2,1],root"])).unwrap();
    assert_eq!(custom[0]["vertex"], "1");
    assert_eq!(custom[0]["kind"], "MadeInterior");
}

#[test]
fn dot_is_well_formed() {
    let dot = stdout(&["show", "ABaaaaBAA"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    let mut declared = HashSet::new();
    for line in dot.lines().map(str::trim) {
        if let Some((lhs, rhs)) = line.trim_end_matches(';').split_once(" -> ") {
            let rhs = rhs.split_whitespace().next().unwrap();
            assert!(declared.contains(lhs) && declared.contains(rhs), "{line}");
        } else if let Some((name, _)) = line.split_once(" [") {
            if !matches!(name, "node" | "edge" | "graph") {
                declared.insert(name.to_string());
            }
        }
    }
    assert!(declared.len() > 10);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["ball", "--radius", "5", "--list"][..],
        &["enum", "ABaaaaBAA", "-c", "2"],
        &["trace", "abABaB", "-k", "3"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn enumeration_and_shortlex() {
    assert_eq!(stdout(&["enum", "ABaaaaBAA"]), "aaaBAAABa\nABaaaaBAA\n");
    assert_eq!(stdout(&["enum", "", "-c", "2"]), "\naA\nbB\nAa\nBb\n");
    assert_eq!(stdout(&["shortlex", "--all", "3"]).lines().count(), 53);
    assert_eq!(stdout(&["shortlex", "Bb", "aA", "ba"]), "aA\nba\n");

    let mut child = Command::new(env!("CARGO_BIN_EXE_thompson"))
        .args(["shortlex", "--order", "BAba"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"ab\nba\nbA\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "bA\nba\nab\n");
}

#[test]
fn ball_cache_roundtrip() {
    let dir = std::env::temp_dir().join(format!("thompson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cache = dir.join("ball.txt");
    let path = cache.to_str().unwrap();
    assert_eq!(
        stdout(&["ball", "--radius", "3", "--cache", path]),
        "0 1\n1 4\n2 12\n3 36\n"
    );
    let text = std::fs::read_to_string(&cache).unwrap();
    assert!(text.starts_with("thompson-ball v1 radius=3\n"));
    assert_eq!(text.lines().count(), 1 + 53);
    assert_eq!(
        stdout(&["ball", "--radius", "2", "--cache", path]),
        "0 1\n1 4\n2 12\n"
    );
    assert_eq!(stdout(&["len", "ABaaaaBAA", "--cache", path]), "9\n");
    // the search grew the ball, which is written back
    let grown = std::fs::read_to_string(&cache).unwrap();
    assert!(!grown.starts_with("thompson-ball v1 radius=3\n"));
    std::fs::write(&cache, "garbage\n").unwrap();
    assert!(!thompson(&["len", "a", "--cache", path]).status.success());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fellow_and_fordham() {
    assert_eq!(stdout(&["fellow", "ABaaaaBAA", "ABaaaaBAA"]), "0\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["fellow", "--json", "ab", "abB"])).unwrap();
    assert_eq!(v["constant"], 1);
    assert_eq!(
        stdout(&["len", "A^4 B a^10 B A^5", "--fordham-table", "default"]),
        "21\n"
    );
    assert!(!thompson(&["len", "a", "--fordham-table", "/nonexistent"])
        .status
        .success());
}
