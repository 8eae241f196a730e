use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

use gradedinv::scenario::{depth_two_b, three_points};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradedinv")).args(args).output().expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gradedinv-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn three_points_file() -> PathBuf {
    temp_file("three.json", &serde_json::to_string(&three_points()).unwrap())
}

#[test]
fn ring_json_is_deterministic() {
    let p = three_points_file();
    let args = ["ring", "--input", p.to_str().unwrap(), "--json", "--window", "-3..6"];
    let (a, b) = (bin(&args), bin(&args));
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["a_invariant"], json!(-1));
    assert_eq!(v["krull_dim"], json!(2));
    let h: Vec<i64> = v["hilbert"].as_array().unwrap().iter().map(|r| r[1].as_i64().unwrap()).collect();
    assert_eq!(h, [0, 0, 0, 1, 1, 1, 4, 4, 4, 7]);
}

#[test]
fn divisor_and_cover_subcommands() {
    let p = three_points_file();
    let o = bin(&["divisor", "--input", p.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["degree"], json!("1"));

    let o = bin(&["cover", "--input", p.to_str().unwrap(), "--json", "--window", "0..3"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["order"], json!(3));
    assert_eq!(v["quasi_gorenstein"], json!(true));
    let h: Vec<i64> = v["hilbert"].as_array().unwrap().iter().map(|r| r[1].as_i64().unwrap()).collect();
    assert_eq!(h, [1, 3, 6, 9]);

    let text = bin(&["cover", "--input", p.to_str().unwrap()]);
    assert_eq!(code(&text), 0);
    assert!(String::from_utf8_lossy(&text.stdout).starts_with("cover\n"));
}

#[test]
fn segre_of_two_files() {
    let a = temp_file("segre-a.json", &json!({"type": "polynomial_ring", "r": 1}).to_string());
    let b = temp_file("segre-b.json", &json!({"type": "polynomial_ring", "r": 2}).to_string());
    let o = bin(&["segre", "--left", a.to_str().unwrap(), "--right", b.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["dim"], json!(4));
    assert_eq!(v["is_cm"], json!(true));
    assert_eq!(v["a_invariant"], json!("-3"));
}

#[test]
fn sections_counts_generators() {
    let p = temp_file("b3.json", &serde_json::to_string(&depth_two_b(3)).unwrap());
    let o = bin(&["sections", "--input", p.to_str().unwrap(), "--top", "3", "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout_json(&o)["generators"]["counts"].is_object());

    let o = bin(&["sections", "--input", p.to_str().unwrap(), "--top", "3", "--max-basis", "2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn paper_cases_exit_zero() {
    let o = bin(&["paper", "--case", "theorem-6.1", "--d", "4"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8_lossy(&o.stdout).contains("all expectations met"));

    let o = bin(&["paper", "--case", "example-4.5", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)[0]["passed"], json!(true));
}

#[test]
fn failed_expectation_exits_one() {
    let s = json!({
        "name": "wrong",
        "construction": {"R": {"kind": "ring", "divisor": three_points()}},
        "expectations": [
            {"quantity": "R.a_invariant", "expected": -1, "provenance": "derived"},
            {"quantity": "R.hilbert@3", "expected": 2, "provenance": "trivial"}
        ]
    });
    let p = temp_file("wrong.json", &s.to_string());
    let o = bin(&["paper", "--scenario", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAILED"));
}

#[test]
fn usage_errors_exit_two() {
    let bad = temp_file("bad.json", "{\"ambient_dim\": 1, \"terms\": [");
    assert_eq!(code(&bin(&["ring", "--input", bad.to_str().unwrap()])), 2);
    let unknown = temp_file("unknown.json", "{\"ambient_dim\": 1, \"terms\": [], \"extra\": 0}");
    assert_eq!(code(&bin(&["divisor", "--input", unknown.to_str().unwrap()])), 2);
    assert_eq!(code(&bin(&["ring", "--input", "/nonexistent/div.json"])), 2);
    assert_eq!(code(&bin(&["frobnicate"])), 2);
    assert_eq!(code(&bin(&["paper", "--case", "griffith"])), 2);
    assert_eq!(code(&bin(&["ring", "--input", "x", "--window", "5..1"])), 2);
}
