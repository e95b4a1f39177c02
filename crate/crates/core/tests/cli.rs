mod common;

use std::path::Path;
use std::process::Command;

use common::fixture_path;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pfladder"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fx(name: &str) -> String {
    fixture_path(name).to_string_lossy().into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn codim_prints_value_first() {
    let (code, out, _) = run(&["codim", "--input", &fx("golden")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("5"));
    assert!(out.contains("groebner codim: 5"));
}

#[test]
fn validate_reports() {
    let (code, out, _) = run(&["validate", "--input", &fx("golden")]);
    assert_eq!(code, 0);
    assert!(out.contains("variables: 14"));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n": 6, "corners": [[4,4]], "t": [1]}"#,
    );
    let (code, _, err) = run(&["validate", "--input", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("a_k<b_k"));
    let extra = write(
        dir.path(),
        "extra.json",
        r#"{"n": 6, "corners": [[1,4]], "t": [1], "x": 0}"#,
    );
    assert_eq!(run(&["validate", "--input", &extra]).0, 2);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(
        dir.path(),
        "broken.json",
        "{\n  \"n\": 6,\n  \"corners\": [[1,4]\n",
    );
    let (code, _, err) = run(&["gb", "--input", &broken]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4"), "{err}");
    assert_eq!(
        run(&["gens", "--input", &fx("golden"), "--frobnicate"]).0,
        2
    );
    assert_eq!(run(&["codim"]).0, 2);
    assert_eq!(run(&["codim", "--input", "/nonexistent/spec.json"]).0, 2);
    assert_eq!(
        run(&["codim", "--input", &fx("golden"), "--field", "fp:33"]).0,
        2
    );
    let unknown = write(dir.path(), "unknown.json", r#"{"kind": "receipt"}"#);
    assert_eq!(run(&["verify", "--input", &unknown]).0, 2);
}

#[test]
fn chain_full_level() {
    let (code, out, _) = run(&["chain", "--level", "full-gb", "--input", &fx("full_6_2")]);
    assert_eq!(code, 0);
    assert!(out.contains("1 step(s)"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn variable_cap_exits_3() {
    let (code, out, _) = run(&[
        "chain",
        "--level",
        "full-gb",
        "--max-vars",
        "8",
        "--input",
        &fx("golden"),
    ]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("skipped"));
}

#[test]
fn identity_check_cases() {
    assert_eq!(
        run(&[
            "identity-check",
            "--p",
            "2",
            "--m",
            "4",
            "--n",
            "6",
            "--trials",
            "25"
        ])
        .0,
        0
    );
    let (code, out, _) = run(&[
        "identity-check",
        "--p",
        "2",
        "--m",
        "2",
        "--n",
        "4",
        "--trials",
        "all",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("256 instances"));
    let (code, _, err) = run(&["identity-check", "--p", "3", "--m", "2", "--n", "6"]);
    assert_eq!(code, 2);
    assert!(err.contains("even length required"));
}

#[test]
fn outputs_are_reproducible_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (cmd, fixture, level) in [
        ("gb", "golden", "full-gb"),
        ("chain", "golden", "full-gb"),
        ("chain", "nested_rows", "formula-only"),
    ] {
        let mut files = Vec::new();
        let mut outs = Vec::new();
        for k in 0..2 {
            let path = dir.path().join(format!("{cmd}-{fixture}-{k}.json"));
            let p = path.to_string_lossy().into_owned();
            let (code, out, _) =
                run(&[cmd, "--input", &fx(fixture), "--level", level, "--out", &p]);
            assert_eq!(code, 0, "{cmd} {fixture}");
            outs.push(out);
            files.push(std::fs::read(&path).unwrap());
            let (code, out, _) = run(&["verify", "--input", &p]);
            assert_eq!(code, 0, "verify {cmd} {fixture}: {out}");
        }
        assert_eq!(outs[0], outs[1]);
        assert_eq!(files[0], files[1]);
    }
}

#[test]
fn other_orders_and_fields() {
    for (order, field) in [("lex", "rat"), ("degrevlex", "fp:32003"), ("lex", "fp:7")] {
        let (code, out, _) = run(&[
            "codim",
            "--input",
            &fx("full_5_2"),
            "--order",
            order,
            "--field",
            field,
        ]);
        assert_eq!(code, 0, "{order} {field}");
        assert!(out.contains("groebner codim: 3"));
    }
}

#[test]
fn gens_lists_pfaffians() {
    let (code, out, _) = run(&["gens", "--input", &fx("full_4_2")]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        "[1,2,3,4] = x[1,4]*x[2,3] - x[1,3]*x[2,4] + x[1,2]*x[3,4]"
    );
}
