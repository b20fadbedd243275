//! Drives the `bedpose` binary through files only, the way a user would.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_bedpose");

fn tiny_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/tiny.json")
}

fn bedpose(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN).current_dir(dir).args(args).output().expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = bedpose(dir, args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Runs a failing command and returns (exit code, stderr line).
fn fails(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = bedpose(dir, args);
    assert!(!out.status.success(), "{args:?} unexpectedly succeeded");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "error output is one line: {err:?}");
    (out.status.code().unwrap(), err.trim_end().to_string())
}

fn synth(dir: &Path) {
    let cfg = tiny_config();
    ok(dir, &["synth", "--out", "data", "--seed", "7", "--config", cfg.to_str().unwrap()]);
    ok(dir, &["split", "--manifest", "data/manifest.json", "--n-test", "1"]);
}

fn train(dir: &Path, run: &str, extra: &[&str]) -> String {
    let cfg = tiny_config();
    let mut args = vec![
        "train",
        "--manifest",
        "data/manifest.json",
        "--split",
        "data/split.json",
        "--run-dir",
        run,
        "--config",
        cfg.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    ok(dir, &args)
}

fn read(p: impl AsRef<Path>) -> Vec<u8> {
    std::fs::read(p.as_ref()).unwrap_or_else(|e| panic!("{}: {e}", p.as_ref().display()))
}

fn files_under(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.push(p.strip_prefix(dir).unwrap().to_path_buf());
            }
        }
    }
    out.sort();
    out
}

fn assert_same_tree(a: &Path, b: &Path) {
    let (fa, fb) = (files_under(a), files_under(b));
    assert_eq!(fa, fb);
    for f in fa {
        assert!(read(a.join(&f)) == read(b.join(&f)), "{} differs", f.display());
    }
}

#[test]
fn synth_split_train_eval_plot_report() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    synth(dir);
    let split: serde_json::Value = serde_json::from_slice(&read(dir.join("data/split.json"))).unwrap();
    assert_eq!(split["test_subjects"], serde_json::json!(["S03"]));
    assert!(dir.join("data/synthetic.json").exists());

    train(dir, "run", &[]);
    for f in ["config.json", "run.json", "log.csv", "split.json", "checkpoints/latest/state.json"] {
        assert!(dir.join("run").join(f).exists(), "{f} missing");
    }
    let run: serde_json::Value = serde_json::from_slice(&read(dir.join("run/run.json"))).unwrap();
    assert_eq!(run["completed"], true);
    assert_eq!(run["seeds"]["optimizer"], 0);
    assert_eq!(run["dataset_fingerprint"].as_str().unwrap().len(), 64);

    ok(dir, &["eval", "--manifest", "data/manifest.json", "--split", "data/split.json", "--run-dir", "run"]);
    let report: serde_json::Value = serde_json::from_slice(&read(dir.join("run/eval/report.json"))).unwrap();
    let thresholds = report["thresholds"].as_array().unwrap().len();
    assert!(thresholds > 2);
    assert_eq!(report["joints"].as_array().unwrap().len(), 14);
    assert_eq!(report["joints"][0]["ap"].as_array().unwrap().len(), thresholds);
    assert!(dir.join("run/eval/ap_curve.csv").exists() && dir.join("run/eval/tables.txt").exists());

    let stdout = ok(dir, &["plot", "run/eval/report.json", "--out", "plots"]);
    assert_eq!(stdout.lines().count(), 15);
    assert!(dir.join("plots/ap_combined.png").exists() && dir.join("plots/ap_head.png").exists());

    let tables = ok(dir, &["report", "run/eval/report.json", "--out", "tables"]);
    assert!(tables.contains("polish_retrain"), "{tables}");
    assert!(dir.join("tables/per_joint.csv").exists() && dir.join("tables/ablation.csv").exists());
}

#[test]
fn paused_training_resumes_bit_identically() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    synth(dir);
    train(dir, "whole", &[]);
    let paused = train(dir, "parts", &["--max-epochs", "1"]);
    assert!(paused.starts_with("paused after 1 epochs"), "{paused}");
    let run: serde_json::Value = serde_json::from_slice(&read(dir.join("parts/run.json"))).unwrap();
    assert_eq!(run["completed"], false);
    train(dir, "parts", &["--max-epochs", "2"]);
    train(dir, "parts", &[]);
    assert_same_tree(&dir.join("whole/checkpoints"), &dir.join("parts/checkpoints"));
    assert_eq!(
        std::fs::read_to_string(dir.join("whole/log.csv")).unwrap(),
        std::fs::read_to_string(dir.join("parts/log.csv")).unwrap()
    );

    // The dumped config alone reproduces the run.
    ok(dir, &["train", "--manifest", "data/manifest.json", "--run-dir", "again", "--config", "whole/config.json"]);
    assert_same_tree(&dir.join("whole/checkpoints"), &dir.join("again/checkpoints"));
}

#[test]
fn eval_of_prediction_files_matches_direct_eval() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    synth(dir);
    train(dir, "run", &[]);
    let data = ["--manifest", "data/manifest.json", "--split", "data/split.json"];
    ok(dir, &[&["predict"][..], &data, &["--run-dir", "run", "--out", "preds"]].concat());
    assert_eq!(files_under(&dir.join("preds")).len(), 2, "one file per held-out sequence");
    ok(dir, &[&["eval"][..], &data, &["--run-dir", "run", "--out", "direct"]].concat());
    let cfg = "run/config.json";
    ok(dir, &[&["eval"][..], &data, &["--predictions", "preds", "--config", cfg, "--out", "files"]].concat());
    assert_eq!(read(dir.join("direct/report.json")), read(dir.join("files/report.json")));
}

#[test]
fn frozen_estimator_on_initial_weights_scores_near_zero() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    synth(dir);
    let cfg = tiny_config();
    let args = [
        "eval",
        "--manifest",
        "data/manifest.json",
        "--config",
        cfg.to_str().unwrap(),
        "--mode",
        "frozen_estimator",
        "--out",
        "frozen",
    ];
    ok(dir, &args);
    let report: serde_json::Value = serde_json::from_slice(&read(dir.join("frozen/report.json"))).unwrap();
    assert_eq!(report["label"], "frozen_estimator");
    let ap5 = report["ap5"].as_f64().unwrap_or(0.0);
    assert!(ap5 < 0.05, "AP5 {ap5}");
}

#[test]
fn failures_are_one_line_with_distinct_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    let (code, msg) = fails(dir, &["split", "--manifest", "nope.json"]);
    assert_eq!(code, 4);
    assert!(msg.starts_with("error: missing-input:"), "{msg}");

    std::fs::write(dir.join("bad.json"), r#"{"name": "x"}"#).unwrap();
    let (code, msg) = fails(dir, &["split", "--manifest", "bad.json"]);
    assert_eq!(code, 6);
    assert!(msg.starts_with("error: schema-violation:"), "{msg}");

    synth(dir);
    let (code, msg) = fails(dir, &["split", "--manifest", "data/manifest.json", "--set", "split.n_tset=1"]);
    assert_eq!(code, 7);
    assert!(msg.starts_with("error: config-error:") && msg.contains("did you mean `n_test`"), "{msg}");

    let (code, msg) = fails(dir, &["split", "--manifest", "data/manifest.json", "--n-test", "3"]);
    assert_eq!(code, 3);
    assert!(msg.starts_with("error: invalid-argument:"), "{msg}");

    train(dir, "run", &["--max-epochs", "1"]);
    let (code, msg) =
        fails(dir, &["train", "--manifest", "data/manifest.json", "--run-dir", "run", "--mode", "retrained_estimator"]);
    assert_eq!(code, 8);
    assert!(msg.starts_with("error: checkpoint-mismatch:"), "{msg}");

    let (code, msg) = fails(dir, &["train", "--bogus"]);
    assert_eq!(code, 2);
    assert!(msg.starts_with("error: usage:"), "{msg}");
}

#[test]
fn version_and_colormaps() {
    let tmp = tempfile::tempdir().unwrap();
    let v = ok(tmp.path(), &["version"]);
    assert!(v.contains(env!("CARGO_PKG_VERSION")) && v.contains("format-version 1"), "{v}");
    let names = ok(tmp.path(), &["colormaps"]);
    assert!(names.lines().any(|l| l == "viridis"), "{names}");
    let fixture: serde_json::Value = serde_json::from_str(&ok(tmp.path(), &["colormaps", "--fixture"])).unwrap();
    assert!(fixture.is_object() || fixture.is_array());
}
