//! End-to-end checks of the command-line surface: exit codes, output
//! determinism, and the recorded behaviors of each subcommand.

use std::process::{Command, Output};

fn grouptop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouptop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn classify_free_group() {
    let output = grouptop(&["classify", "--descriptor", r#"{"kind":"free","rank":2}"#]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("mon_cofinite    yes"));
    assert!(text.contains("cen_cofinite    no"));
    assert!(text.contains("zar_cofinite    no"));
}

#[test]
fn classify_qmodz_is_fully_cofinite() {
    let output = grouptop(&[
        "classify",
        "--descriptor",
        r#"{"kind":"abelian","blocks":[{"kind":"qmodz","mult":1}]}"#,
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["properties"]["zar_cofinite"]["verdict"], "yes");
}

#[test]
fn classify_finite_group_is_all_yes() {
    let output = grouptop(&[
        "classify",
        "--descriptor",
        r#"{"kind":"cyclic","n":6}"#,
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    for key in ["mon_cofinite", "cen_cofinite", "zar_cofinite", "wcl", "atf"] {
        assert_eq!(json["properties"][key]["verdict"], "yes", "{key}");
    }
}

#[test]
fn classify_bad_descriptor_exits_2() {
    let output = grouptop(&["classify", "--descriptor", "{not json"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn classify_unknown_name_exits_4() {
    let output = grouptop(&[
        "classify",
        "--descriptor",
        r#"{"kind":"known","name":"mystery"}"#,
    ]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn classify_output_is_deterministic() {
    let args = [
        "classify",
        "--descriptor",
        r#"{"kind":"heisenberg","ring":"Z"}"#,
        "--format",
        "json",
    ];
    let first = stdout(&grouptop(&args));
    let second = stdout(&grouptop(&args));
    assert_eq!(first, second);
}

#[test]
fn topology_closure_of_identity_in_quaternion8() {
    let output = grouptop(&[
        "topology",
        "--group",
        r#"{"kind":"quaternion8"}"#,
        "--subbasis",
        "centralizer",
        "--closure-of",
        "0",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("closure of {1} = {1, -1}"), "got: {text}");
    assert!(text.contains("t1: false"));
    assert!(text.contains("quasitopological: true"));
}

#[test]
fn topology_monomial_family_on_cyclic_four_is_discrete() {
    let output = grouptop(&[
        "topology",
        "--group",
        r#"{"kind":"cyclic","n":4}"#,
        "--subbasis",
        "monomial",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["discrete"], true);
}

#[test]
fn topology_cap_exceeded_exits_3() {
    let output = grouptop(&[
        "topology",
        "--group",
        r#"{"kind":"cyclic","n":12}"#,
        "--cap",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn topology_emits_dot() {
    let output = grouptop(&[
        "topology",
        "--group",
        r#"{"kind":"symmetric","n":3}"#,
        "--subbasis",
        "centralizer",
        "--emit",
        "hasse",
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).starts_with("digraph"));

    let compare = grouptop(&[
        "topology",
        "--group",
        r#"{"kind":"symmetric","n":3}"#,
        "--emit",
        "compare",
    ]);
    assert!(compare.status.success());
    assert!(stdout(&compare).starts_with("digraph topologies"));
}

#[test]
fn solve_word_finds_centralizer() {
    let output = grouptop(&[
        "solve",
        "word",
        "--group",
        r#"{"kind":"cyclic","n":6}"#,
        "--word",
        "g2 x",
    ]);
    assert!(output.status.success());
    // gx = e has the unique solution g^-1 = 4.
    assert!(stdout(&output).contains("solutions (1): {4}"));
}

#[test]
fn solve_word_rejects_bad_literals() {
    let output = grouptop(&[
        "solve",
        "word",
        "--group",
        r#"{"kind":"cyclic","n":6}"#,
        "--word",
        "q x",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn solve_abelian_in_z6() {
    let output = grouptop(&[
        "solve",
        "abelian",
        "--factors",
        "6",
        "-n",
        "2",
        "--target",
        "4",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("solutions (2)"), "got: {text}");

    let empty = grouptop(&[
        "solve",
        "abelian",
        "--factors",
        "6",
        "-n",
        "2",
        "--target",
        "3",
    ]);
    assert!(empty.status.success());
    assert!(stdout(&empty).contains("no solutions"));
}

#[test]
fn solve_abelian_from_relations() {
    // Z^2 / <(2,0),(0,3)> = Z/6; 2x = 4 has two solutions there.
    let output = grouptop(&[
        "solve",
        "abelian",
        "--relations",
        "2,0;0,3",
        "-n",
        "2",
        "--target",
        "4",
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("solutions (2)"));
}

#[test]
fn solve_heisenberg_cube_root() {
    let output = grouptop(&[
        "solve",
        "heisenberg",
        "--ring",
        "Z",
        "-n",
        "3",
        "--target",
        "3,3,3",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["count"], 1);
    assert_eq!(json["witnesses"][0], "(1,1,0)");

    let empty = grouptop(&[
        "solve",
        "heisenberg",
        "--ring",
        "Z",
        "-n",
        "2",
        "--target",
        "1,0,0",
    ]);
    assert!(stdout(&empty).contains("no solutions"));
}

#[test]
fn solve_free_root() {
    let output = grouptop(&["solve", "free-root", "--word", "abab", "-n", "2"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("solutions (1): ab"));

    let empty = grouptop(&["solve", "free-root", "--word", "ab", "-n", "2"]);
    assert!(stdout(&empty).contains("no solutions"));
}

#[test]
fn structure_report_for_s4() {
    let output = grouptop(&[
        "structure",
        "--group",
        r#"{"kind":"symmetric","n":4}"#,
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["subgroup_count"], 30);
    assert_eq!(json["derived_series"].as_array().unwrap().len(), 4);
    assert_eq!(json["fitting_subgroup"].as_array().unwrap().len(), 4);
}

#[test]
fn structure_cap_exceeded_exits_3() {
    let output = grouptop(&[
        "structure",
        "--group",
        r#"{"kind":"symmetric","n":4}"#,
        "--cap",
        "10",
    ]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn verify_single_suite_passes() {
    let output = grouptop(&["verify", "heisenberg"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("PASS heisenberg"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_unknown_suite_exits_4() {
    let output = grouptop(&["verify", "unknown-suite"]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn verify_core_emits_json_summary() {
    let output = grouptop(&["verify", "core", "--format", "json"]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json[0]["suite"], "core");
    assert!(json[0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn unknown_flags_exit_2() {
    let output = grouptop(&["classify", "--bogus-flag", "x"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn descriptor_can_come_from_a_file() {
    let dir = std::env::temp_dir().join(format!("grouptop-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("descriptor.json");
    std::fs::write(&path, r#"{"kind":"heisenberg","ring":"Z"}"#).unwrap();
    let output = grouptop(&[
        "classify",
        "--file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["properties"]["wcl"]["verdict"], "yes");
    assert_eq!(json["properties"]["cen_cofinite"]["verdict"], "no");
    std::fs::remove_dir_all(&dir).ok();

    let missing = grouptop(&["classify", "--file", "/nonexistent/desc.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn corpus_classification_lists_every_group() {
    let output = grouptop(&["classify", "--corpus"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 27);
    assert!(text.lines().all(|line| line.contains("zar_cofinite=yes")));
}
