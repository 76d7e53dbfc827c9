//! Command-line behavior: exit codes, error stubs, config precedence and
//! the required examples.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (String, String, Option<i32>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brieskorn"));
    cmd.args(args).env_remove("BRIESKORN_DATA_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

#[test]
fn info_reports_degree_shift() {
    let (stdout, _, code) = run(&["info", "6", "2", "2", "2"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("degree_shift: 8"), "{stdout}");

    let (stdout, _, code) = run(&["info", "2", "4", "4"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("shift_class: ZeroShift"), "{stdout}");
}

#[test]
fn validation_failures_exit_2() {
    let (_, stderr, code) = run(&["info", "1", "2"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("a_0 = 1"), "{stderr}");

    let (_, _, code) = run(&["info", "2"]);
    assert_eq!(code, Some(2));

    let path = zero_shift_betti_file();
    let (_, stderr, code) = run(&[
        "module", "2", "4", "4", "--window", "-3", "3", "--betti", path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("Laurent series"), "{stderr}");
}

fn zero_shift_betti_file() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("brieskorn_test_zero_shift");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("betti.json");
    std::fs::write(&path, r#"{"2,4,4": [1, 1, 1, 1], "4,4": [4, 4]}"#).unwrap();
    path
}

#[test]
fn missing_betti_exits_3_with_stub() {
    let (_, stderr, code) = run(&["module", "7", "5", "3"]);
    assert_eq!(code, Some(3));
    assert!(stderr.contains("(3,5,7)"), "{stderr}");
    assert!(stderr.contains("\"3,5,7\""), "{stderr}");
}

#[test]
fn unknown_example_exits_4() {
    let (_, stderr, code) = run(&["verify", "no-such"]);
    assert_eq!(code, Some(4));
    assert!(stderr.contains("available"), "{stderr}");
}

#[test]
fn unconverged_algebra_exits_5() {
    // Cap 1 cannot see the longer monomials of the free ring on a
    // degree-1 generator over a window reaching degree 5.
    let dir = std::env::temp_dir().join("brieskorn_test_unconverged");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("free.json");
    std::fs::write(
        &path,
        r#"{"generators": [{"name": "x", "degree": 1}], "relations": []}"#,
    )
    .unwrap();
    let (_, stderr, code) = run(&[
        "algebra",
        "compare",
        "--presentation",
        path.to_str().unwrap(),
        "--module-degrees",
        "0",
        "--shift",
        "1",
        "--window",
        "0",
        "5",
        "--cap",
        "1",
    ]);
    assert_eq!(code, Some(5), "{stderr}");
    assert!(stderr.contains("stabilize"), "{stderr}");
}

#[test]
fn verify_named_examples_pass() {
    let (stdout, _, code) = run(&["verify", "cotangent-spheres", "--format", "json"]);
    assert_eq!(code, Some(0), "{stdout}");
    assert!(stdout.contains("\"all_passed\": true"), "{stdout}");

    let (stdout, _, code) = run(&["verify", "sigma-ell", "--format", "json"]);
    assert_eq!(code, Some(0));
    // Passes and carries the grading-shift note.
    assert!(stdout.contains("\"all_passed\": true"), "{stdout}");
    assert!(stdout.contains("Conley-Zehnder grading"), "{stdout}");
}

#[test]
fn user_betti_file_overrides_builtin() {
    let dir = std::env::temp_dir().join("brieskorn_test_user_betti");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("betti.json");
    std::fs::write(&path, r#"{"2,2,2": [5, 1, 1, 5]}"#).unwrap();
    let (stdout, _, code) = run(&[
        "strata",
        "2",
        "2",
        "2",
        "--max-l",
        "2",
        "--betti",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("5;1;1;5,UserConfig"), "{stdout}");
}

#[test]
fn data_dir_env_replaces_bundled_defaults() {
    let dir = std::env::temp_dir().join("brieskorn_test_data_dir");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("betti.json"), r#"{"2,2,2,4": [1, 1, 1, 1, 1, 1]}"#).unwrap();
    let (stdout, _, code) = run_with_env(
        &["strata", "4", "2", "2", "2", "--max-l", "0", "--format", "csv"],
        &[("BRIESKORN_DATA_DIR", dir.to_str().unwrap())],
    );
    assert_eq!(code, Some(0));
    assert!(stdout.contains("1;1;1;1;1;1,BuiltIn"), "{stdout}");
}

#[test]
fn generators_zero_shift_needs_time_bound() {
    let path = zero_shift_betti_file();
    let (_, stderr, code) = run(&[
        "generators", "2", "4", "4", "--window", "-3", "3", "--betti", path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("finite period window"), "{stderr}");

    // An explicit time bound makes the zero-shift listing well-defined.
    let (stdout, _, code) = run(&[
        "generators",
        "2",
        "4",
        "4",
        "--max-l",
        "4",
        "--betti",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, Some(0), "{stdout}");
    assert!(stdout.lines().count() > 2, "{stdout}");
}

#[test]
fn module_csv_has_degree_dim_columns() {
    let (stdout, _, code) = run(&[
        "module", "4", "2", "2", "2", "--window", "0", "5", "--format", "csv",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("degree,dim\n"), "{stdout}");
    assert!(stdout.contains("rank,8"), "{stdout}");
    // Dimensions 2,2,1,1,1,1 in degrees 0..5.
    for line in ["0,2", "1,2", "2,1", "3,1", "4,1", "5,1"] {
        assert!(stdout.contains(&format!("\n{line}\n")), "{line} in {stdout}");
    }
}

#[test]
fn json_reports_echo_inputs() {
    let (stdout, _, code) = run(&[
        "module", "4", "2", "2", "2", "--window", "-6", "6", "--format", "json",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["provenance"]["exponents"], serde_json::json!([4, 2, 2, 2]));
    assert_eq!(v["provenance"]["window"], serde_json::json!([-6, 6]));
    assert_eq!(v["rank"], serde_json::json!(8));
    assert_eq!(v["degree_shift"], serde_json::json!(6));
}

#[test]
fn homology_without_override_refuses_for_unknown_differential() {
    let (_, stderr, code) = run(&[
        "module", "2", "2", "2", "2", "--window", "-4", "4", "--homology",
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("Unknown"), "{stderr}");

    let (stdout, _, code) = run(&[
        "module",
        "2",
        "2",
        "2",
        "2",
        "--window",
        "-4",
        "4",
        "--homology",
        "--external-vanishing",
        "checked elsewhere",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("checked elsewhere"), "{stdout}");
}
