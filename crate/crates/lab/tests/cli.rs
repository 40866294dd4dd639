use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_engel-lab")).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, value: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_engel-lab")).args(args).env(key, value).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn s8_example_matches_its_golden_file() {
    let out = run(&["examples", "--id", "s8", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["golden"], "match");
    assert_eq!(v["results"]["passed"], true);
    assert_eq!(v["status"], "ok");
}

#[test]
fn every_stored_example_matches() {
    for id in ["dihedral(2)", "dihedral(6)", "dihedral(10)", "wreath"] {
        let out = run(&["examples", "--id", id, "--json"]);
        assert_eq!(code(&out), 0, "{id}");
        assert_eq!(json(&out)["results"]["golden"], "match", "{id}");
    }
    // no file stored beyond n = 10: checks still run
    let out = run(&["examples", "--id", "dihedral(12)", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["golden"], "absent");
}

#[test]
fn degree_reports_a_cycle_certificate() {
    let out = run(&["degree", "--group", "sym(3)", "--x", "(1,2)", "--y", "(2,3)", "--json"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["results"];
    assert_eq!(r["mutual_degree"], Value::Null);
    assert_eq!(r["x_against_y"]["degree"], Value::Null);
    assert_eq!(r["x_against_y"]["cycle_length"], 1);
    assert_eq!(r["x_against_y"]["trace"], serde_json::json!(["(1,2)", "(1,2,3)"]));
}

#[test]
fn analyze_finds_class_four() {
    let out = run(&["analyze", "--group", "wreath(cyc(2),cyc(4))", "--json"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["results"];
    assert_eq!(r["order"], 64);
    assert_eq!(r["nilpotency_class"], 4);
    assert_eq!(r["nilpotent"], true);
}

#[test]
fn text_mode_carries_the_same_fields() {
    let args = ["analyze", "--group", "(1,2,3);(1,2)"];
    let text = String::from_utf8(run(&args).stdout).unwrap();
    let mut with_json = args.to_vec();
    with_json.push("--json");
    let v = json(&run(&with_json));
    for key in v["results"].as_object().unwrap().keys() {
        assert!(text.contains(&format!("{key}:")), "{key}");
    }
    assert!(text.contains("order: 6"));
}

#[test]
fn exit_codes() {
    // usage and parse errors
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["analyze", "--group", "foo(3)"])), 2);
    assert_eq!(code(&run(&["analyze", "--group", "sym(3"])), 2);
    assert_eq!(code(&run(&["degree", "--group", "sym(3)", "--x", "(1,2", "--y", "(1,2)"])), 2);
    assert_eq!(code(&run(&["degree", "--group", "sym(3)", "--x", "(1,4)", "--y", "(1,2)"])), 2);
    assert_eq!(code(&run(&["degree", "--group", "alt(4)", "--x", "(1,2)", "--y", "(1,2,3)"])), 2);
    assert_eq!(code(&run(&["search-star", "--group", "sym(4)", "--x", "(1,2)", "--n", "0"])), 2);
    assert_eq!(code(&run(&["sylow-hunt", "--group", "sym(4)", "--prime", "6"])), 2);
    assert_eq!(code(&run(&["theorems", "--id", "thm99"])), 2);
    assert_eq!(code(&run(&["examples", "--id", "a5"])), 2);
    assert_eq!(code(&run(&["analyze", "--group", "sym(3)", "--json", "--text"])), 2);
    // cap exceeded
    assert_eq!(code(&run(&["search-star", "--group", "sym(10)", "--x", "(1,2)"])), 3);
    assert_eq!(code(&run(&["search-star", "--group", "sym(6)", "--x", "(1,2)", "--cap", "100"])), 3);
    // success
    assert_eq!(code(&run(&["sylow-hunt", "--group", "sym(4)", "--prime", "3"])), 0);
}

#[test]
fn golden_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let stored = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/v1/s8.json")).unwrap();
    std::fs::write(dir.path().join("s8.json"), stored.replace("(1,5)(4,6)", "(1,5)(4,7)")).unwrap();
    let out = run_env(&["examples", "--id", "s8", "--json"], "ENGEL_LAB_GOLDEN_DIR", dir.path());
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["results"]["golden"], "mismatch");
    assert_eq!(json(&out)["status"], "mismatch");
    // an empty directory holds no golden file at all
    let empty = tempfile::tempdir().unwrap();
    let out = run_env(&["examples", "--id", "s8", "--json"], "ENGEL_LAB_GOLDEN_DIR", empty.path());
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["golden"], "absent");
}

#[test]
fn theorem_scan_on_a_small_corpus() {
    let out = run(&["theorems", "--id", "all", "--corpus", "sym(3);dih2(2)", "--corpus", "alt(4)", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["total_violations"], 0);
    assert_eq!(v["inputs"]["corpus"], serde_json::json!(["sym(3)", "dih2(2)", "alt(4)"]));
    assert_eq!(v["results"]["scans"].as_array().unwrap().len(), 7);
}

fn strip_volatile(mut v: Value) -> Value {
    let obj = v.as_object_mut().unwrap();
    obj.remove("timing");
    obj.remove("command");
    v
}

#[test]
fn output_is_independent_of_worker_count() {
    let base = ["search-star", "--group", "sym(6)", "--x", "(1,2,3,4)(5,6)", "--json"];
    let one = json(&run(&[&base[..], &["--workers", "1"]].concat()));
    let four = json(&run(&[&base[..], &["--workers", "4"]].concat()));
    assert_eq!(strip_volatile(one), strip_volatile(four));
    let hunt = ["sylow-hunt", "--group", "wreath(sym(3),cyc(4))", "--prime", "2", "--json"];
    let one = json(&run(&[&hunt[..], &["--workers", "1"]].concat()));
    let three = json(&run(&[&hunt[..], &["--workers", "3"]].concat()));
    assert_eq!(strip_volatile(one), strip_volatile(three));
}

#[test]
fn reports_follow_the_shipped_schema() {
    let schema: Value =
        serde_json::from_str(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json")))
            .unwrap();
    let required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|k| k.as_str().unwrap()).collect();
    let runs: [&[&str]; 5] = [
        &["examples", "--id", "dihedral(3)", "--json"],
        &["degree", "--group", "sym(4)", "--x", "(1,2,3,4)", "--y", "(1,3)", "--json"],
        &["analyze", "--group", "sym(4)", "--json"],
        &["search-star", "--group", "sym(4)", "--x", "(1,2)", "--filter", "nonnilpotent", "--json"],
        &["sylow-hunt", "--group", "sym(4)", "--prime", "2", "--json"],
    ];
    for args in runs {
        let v = json(&run(args));
        let obj = v.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        let mut want = required.clone();
        want.sort_unstable();
        assert_eq!(keys, want, "{args:?}");
        assert_eq!(v["schema"], schema["properties"]["schema"]["const"]);
        assert!(["ok", "mismatch"].contains(&v["status"].as_str().unwrap()));
        assert!(v["inputs"].is_object() && v["results"].is_object());
        assert!(v["timing"]["wall_ms"].is_u64() && v["timing"]["workers"].as_u64().unwrap() >= 1);
        assert!(v["command"].as_str().unwrap().starts_with("engel-lab "));
    }
}
