//! End-to-end tests of the `horizons` binary: exit codes, output contracts,
//! and determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn horizons(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horizons"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary should run")
}

fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn write_fig1(dir: &Path) -> String {
    let path = dir.join("fig1.jsonl");
    std::fs::write(
        &path,
        concat!(
            r#"{"id":"e1","participants":["v1","v2","v3","v8"],"opened_at":1,"closed_at":1}"#,
            "\n",
            r#"{"id":"e2","participants":["v2","v4","v9"],"opened_at":2,"closed_at":2}"#,
            "\n",
            r#"{"id":"e3","participants":["v3","v5","v6","v7"],"opened_at":4,"closed_at":4}"#,
            "\n",
            r#"{"id":"e4","participants":["v4","v5","v6"],"opened_at":3,"closed_at":3}"#,
            "\n",
        ),
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generate_writes_requested_channel_count_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "generate",
        "--vertices",
        "100",
        "--channels",
        "500",
        "--seed",
        "7",
        "-o",
        "net.jsonl",
    ];
    let out = horizons(&args, dir.path());
    assert!(out.status.success(), "stderr: {:?}", out.stderr);

    let first = std::fs::read(dir.path().join("net.jsonl")).unwrap();
    assert_eq!(first.iter().filter(|&&b| b == b'\n').count(), 500);

    let args2 = [
        "generate",
        "--vertices",
        "100",
        "--channels",
        "500",
        "--rng-seed",
        "7",
        "-o",
        "net2.jsonl",
    ];
    assert!(horizons(&args2, dir.path()).status.success());
    let second = std::fs::read(dir.path().join("net2.jsonl")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn generate_rejects_infeasible_sizes_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = horizons(
        &[
            "generate",
            "--vertices",
            "1",
            "--min-size",
            "2",
            "-o",
            "x.jsonl",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn generate_csv_round_trips_through_compare() {
    let dir = tempfile::tempdir().unwrap();
    let out = horizons(
        &[
            "generate",
            "--vertices",
            "30",
            "--channels",
            "60",
            "--window-end",
            "1000",
            "--mean-duration",
            "50",
            "--seed",
            "3",
            "--format",
            "csv",
            "-o",
            "net.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let head = std::fs::read_to_string(dir.path().join("net.csv")).unwrap();
    assert!(head.starts_with("id,participants,opened_at,closed_at\n"));

    // extension-based format inference picks CSV back up
    let out = horizons(&["compare", "--input", "net.csv"], dir.path());
    assert!(out.status.success(), "stderr: {:?}", out.stderr);
    let doc: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["channel_count"], 60);
}

#[test]
fn horizon_respecting_prints_the_informed_map() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fig1(dir.path());
    let out = horizons(
        &[
            "horizon",
            "--input",
            &input,
            "--window-start",
            "0",
            "--window-end",
            "10",
            "--seed",
            "v1",
            "--seed-time",
            "0",
            "--model",
            "respecting",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "stderr: {:?}", out.stderr);
    let map: Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    let map = map.as_object().unwrap();
    assert_eq!(map.len(), 8);
    assert_eq!(map["v2"], 1);
    assert_eq!(map["v6"], 3);
    assert_eq!(map["v7"], 4);
}

#[test]
fn horizon_ignoring_prints_the_reachable_set() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fig1(dir.path());
    let out = horizons(
        &[
            "horizon", "--input", &input, "--seed", "v6", "--model", "ignoring",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let set: Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    let set = set.as_array().unwrap();
    assert_eq!(set.len(), 8);
    assert!(!set.iter().any(|v| v == "v6"));
}

#[test]
fn horizon_unknown_seed_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fig1(dir.path());
    let out = horizons(
        &[
            "horizon",
            "--input",
            &input,
            "--seed",
            "zz",
            "--model",
            "respecting",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_exits_1_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.jsonl");
    std::fs::write(
        &path,
        concat!(
            r#"{"id":"ok","participants":["a","b"],"opened_at":0,"closed_at":1}"#,
            "\n",
            "not json",
            "\n",
        ),
    )
    .unwrap();
    let out = horizons(
        &["horizon", "--input", path.to_str().unwrap(), "--seed", "a"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn compare_single_channel_reports_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.jsonl");
    std::fs::write(
        &path,
        concat!(
            r#"{"id":"r","participants":["a","b"],"opened_at":0,"closed_at":5}"#,
            "\n"
        ),
    )
    .unwrap();
    let out = horizons(
        &[
            "compare",
            "--input",
            path.to_str().unwrap(),
            "--window-start",
            "0",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    for key in ["respecting_summary", "ignoring_summary"] {
        assert_eq!(doc[key]["mean"], 1.0);
        assert_eq!(doc[key]["median"], 1);
        assert_eq!(doc[key]["min"], 1);
        assert_eq!(doc[key]["max"], 1);
    }
}

#[test]
fn compare_reports_summaries_and_csv_contract() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fig1(dir.path());

    // JSON report to stdout
    let out = horizons(
        &[
            "compare",
            "--input",
            &input,
            "--window-start",
            "0",
            "--window-end",
            "10",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["ignoring_summary"]["mean"], 8.0);
    assert!(doc["respecting_summary"]["mean"].as_f64().unwrap() < 8.0);

    // CSV report to a file, summary line on stdout
    let out = horizons(
        &[
            "compare",
            "--input",
            &input,
            "--window-start",
            "0",
            "--window-end",
            "10",
            "--format",
            "csv",
            "-o",
            "report.csv",
            "--workers",
            "2",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let summary: Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(summary["ignoring"]["mean"], 8.0);
    let report = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(report.starts_with("vertex_id,respecting,ignoring,diff\n"));
    assert!(report.contains("# summary\n"));
}

#[test]
fn components_prints_the_size_histogram() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.jsonl");
    std::fs::write(
        &path,
        concat!(
            r#"{"id":"r1","participants":["a","b"],"opened_at":0,"closed_at":1}"#,
            "\n",
            r#"{"id":"r2","participants":["c","d","e"],"opened_at":0,"closed_at":1}"#,
            "\n",
        ),
    )
    .unwrap();
    let out = horizons(
        &["components", "--input", path.to_str().unwrap()],
        dir.path(),
    );
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(
        doc,
        serde_json::json!([{"size": 3, "count": 1}, {"size": 2, "count": 1}])
    );
}

#[test]
fn deny_list_excludes_participants() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("net.jsonl");
    std::fs::write(
        &data,
        concat!(
            r#"{"id":"r1","participants":["bot","a","b"],"opened_at":0,"closed_at":1}"#,
            "\n",
            r#"{"id":"r2","participants":["bot","c"],"opened_at":0,"closed_at":2}"#,
            "\n",
        ),
    )
    .unwrap();
    std::fs::write(dir.path().join("deny.txt"), "# tooling accounts\nbot\n").unwrap();

    let out = horizons(
        &[
            "components",
            "--input",
            data.to_str().unwrap(),
            "--deny-list",
            "deny.txt",
            "--min-participants",
            "2",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    // r2 lost "bot" and fell below the participant floor; only {a, b} remains
    assert_eq!(doc, serde_json::json!([{"size": 2, "count": 1}]));
}
