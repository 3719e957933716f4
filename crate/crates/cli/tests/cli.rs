//! Black-box checks of the `vocform` binary: exit codes, environment
//! fallback, and emitted files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn workspace_path(relative: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(relative)
}

fn vocform(args: &[&str]) -> Command {
    let mut command = Command::new(env!("CARGO_BIN_EXE_vocform"));
    command.env_remove("VOCFORM_MANIFEST");
    command.args(args);
    command
}

fn manifest() -> String {
    workspace_path("resources/desk/manifest.toml")
        .display()
        .to_string()
}

fn run(command: &mut Command) -> Output {
    command.output().expect("binary runs")
}

#[test]
fn missing_manifest_is_a_usage_error() {
    let out = run(vocform(&["generate", "--passage", "x.txt"]).env_remove("VOCFORM_MANIFEST"));
    assert_eq!(out.status.code(), Some(1), "{out:?}");
}

#[test]
fn unknown_flags_exit_with_usage() {
    let out = run(&mut vocform(&["generate", "--no-such-flag"]));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&mut vocform(&["--help"]));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn broken_resources_exit_with_resource_code() {
    let out = run(&mut vocform(&[
        "validate-resources",
        "--manifest",
        "/definitely/not/here.toml",
    ]));
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn pipeline_problems_exit_with_pipeline_code() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "The of and in. A but or!").unwrap();
    let out = run(
        vocform(&["generate", "--manifest", &manifest(), "--passage"])
            .arg(&empty)
            .arg("--out-dir")
            .arg(dir.path()),
    );
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn manifest_comes_from_the_environment() {
    let out = run(Command::new(env!("CARGO_BIN_EXE_vocform"))
        .env("VOCFORM_MANIFEST", manifest())
        .arg("validate-resources"));
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("noun supply"));
}

#[test]
fn generate_without_label_withholds_print_and_suggests() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        vocform(&["generate", "--manifest", &manifest(), "--passage"])
            .arg(workspace_path("passages/thunderstorm.txt"))
            .arg("--out-dir")
            .arg(dir.path()),
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(dir.path().join("thunderstorm.easy.form.json").exists());
    assert!(dir.path().join("thunderstorm.easy.key.json").exists());
    assert!(dir.path().join("thunderstorm.easy.record.json").exists());
    assert!(!dir.path().join("thunderstorm.easy.print.txt").exists());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("suggestions:"), "{stderr}");
    let record: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("thunderstorm.easy.record.json")).unwrap(),
    )
    .unwrap();
    assert!(!record["suggested_labels"].as_array().unwrap().is_empty());
    assert!(record["config"]["seeds"]["clustering"].is_u64());
}

#[test]
fn clusters_top_limits_the_dump() {
    let out = run(
        vocform(&["clusters", "--manifest", &manifest(), "--passage"])
            .arg(workspace_path("passages/volcano.txt"))
            .args(["--top", "3"]),
    );
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let rows = stdout
        .lines()
        .filter(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit()));
    assert_eq!(rows.count(), 3, "{stdout}");
    assert!(stdout.starts_with("rank\tdoc_similarity\tterms"));
}

#[test]
fn scoring_a_directory_reports_each_sheet_and_the_mean() {
    let dir = tempfile::tempdir().unwrap();
    let status = vocform(&["generate", "--manifest", &manifest(), "--passage"])
        .arg(workspace_path("passages/cells.txt"))
        .args(["--topic-label", "cells", "--out-dir"])
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success());

    let key = dir.path().join("cells.easy.key.json");
    let form: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&key).unwrap()).unwrap();
    let sheets = dir.path().join("sheets");
    std::fs::create_dir(&sheets).unwrap();
    // One perfect sheet (JSON) and one all-unchecked sheet (CSV).
    let mut marks = serde_json::Map::new();
    for item in form["items"].as_array().unwrap() {
        marks.insert(
            item["term"].as_str().unwrap().to_owned(),
            item["key"].clone(),
        );
    }
    std::fs::write(
        sheets.join("perfect.json"),
        serde_json::json!({"form_id": "cells", "marks": marks}).to_string(),
    )
    .unwrap();
    let csv: String = form["items"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| format!("{},false\n", i["term"].as_str().unwrap()))
        .collect();
    std::fs::write(sheets.join("blank.csv"), csv).unwrap();

    let out = run(vocform(&["score", "--form"])
        .arg(&key)
        .arg("--responses")
        .arg(&sheets));
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.contains("aggregate: 2 sheets, mean proportion correct 0.7200"),
        "{stdout}"
    );
}

#[test]
fn scoring_an_off_form_term_fails() {
    let dir = tempfile::tempdir().unwrap();
    let status = vocform(&["generate", "--manifest", &manifest(), "--passage"])
        .arg(workspace_path("passages/volcano.txt"))
        .args(["--topic-label", "volcanoes", "--out-dir"])
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    let sheet = dir.path().join("sheet.csv");
    std::fs::write(&sheet, "interloper,true\n").unwrap();
    let out = run(vocform(&["score", "--form"])
        .arg(dir.path().join("volcano.easy.key.json"))
        .arg("--responses")
        .arg(&sheet));
    assert_eq!(out.status.code(), Some(3), "{out:?}");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("interloper"), "{stderr}");
}
