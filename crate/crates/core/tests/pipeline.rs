//! Mode contracts of the full pipeline on a tiny synthetic dataset: which
//! networks train, what predictions expose, and repeated-run seeding.

use bedpose::dataset::Dataset;
use bedpose::experiment::{build_pipeline, prepare_data, repeat_runs, run_experiment, train_models, ExperimentConfig};
use bedpose::pressure::PressureFrame;
use bedpose::synthetic::generate_dataset;
use bedpose::training::{ModelState, TrainState};
use bedpose::Error;

fn tiny(mode: &str) -> ExperimentConfig {
    let json = r#"{
        "split": { "n_test": 1 },
        "sample": { "working_resolution": [32, 32] },
        "estimator": {
            "n_stages": 2, "input_resolution": [32, 32], "heatmap_resolution": [16, 32],
            "backbone_channels": 8, "backbone_depth": 1, "stage_channels": 8, "stage_dilations": [1]
        },
        "polishnet": { "n_encoder_blocks": 5, "base_channels": 4, "max_channel_multiplier": 2, "resolution": [32, 32] },
        "optimizer": { "epochs": 1, "batch_size": 4 },
        "synthetic": { "n_subjects": 3, "frames_per_subject": 8, "sequences_per_subject": 2 }
    }"#;
    let mut cfg: ExperimentConfig = serde_json::from_str(json).unwrap();
    cfg.mode = mode.into();
    cfg
}

fn tiny_data(cfg: &ExperimentConfig) -> Dataset {
    generate_dataset(&cfg.synthetic).unwrap().dataset
}

fn initial(cfg: &ExperimentConfig) -> ModelState {
    ModelState::init(&cfg.setup().unwrap()).unwrap()
}

#[test]
fn frozen_estimator_runs_no_iterations() {
    let cfg = tiny("frozen_estimator");
    let data = prepare_data(&tiny_data(&cfg), &cfg).unwrap();
    let (state, log) = train_models(&data, &cfg, None, |_, _| Ok(())).unwrap();
    assert!(log.is_empty());
    assert_eq!(state, TrainState::new(initial(&cfg)));
}

#[test]
fn polish_frozen_trains_only_the_polishing_network() {
    let cfg = tiny("polish_frozen");
    let data = prepare_data(&tiny_data(&cfg), &cfg).unwrap();
    let (state, log) = train_models(&data, &cfg, None, |_, _| Ok(())).unwrap();
    assert!(!log.is_empty());
    let init = initial(&cfg);
    assert_eq!(state.models.estimator.tensors, init.estimator.tensors);
    assert_ne!(state.models.polish.unwrap().tensors, init.polish.unwrap().tensors);
}

#[test]
fn retrained_estimator_has_no_polishing_network() {
    let cfg = tiny("retrained_estimator");
    let data = prepare_data(&tiny_data(&cfg), &cfg).unwrap();
    let (state, _) = train_models(&data, &cfg, None, |_, _| Ok(())).unwrap();
    assert!(state.models.polish.is_none());
    assert_ne!(state.models.estimator.tensors, initial(&cfg).estimator.tensors);
}

/// Predictions carry the polished image exactly when the mode polishes,
/// at the working resolution and within the network's value range.
#[test]
fn predictions_expose_the_polished_image() {
    for (mode, polished) in [("polish_retrain", true), ("retrained_estimator", false)] {
        let cfg = tiny(mode);
        let data = prepare_data(&tiny_data(&cfg), &cfg).unwrap();
        let pipeline = build_pipeline(&cfg, &initial(&cfg)).unwrap();
        let frames: Vec<&PressureFrame> = data.test_frames.iter().collect();
        let preds = pipeline.predict(&frames).unwrap();
        assert!(!preds.is_empty() && preds.len() == frames.len());
        for (p, f) in preds.iter().zip(&frames) {
            assert_eq!((p.subject_id.as_str(), p.frame_index), (f.subject_id.as_str(), f.frame_index));
            assert_eq!(p.polished.is_some(), polished, "{mode}");
            if let Some(img) = &p.polished {
                assert_eq!((img.width, img.height), cfg.sample.working_resolution);
                assert!(img.data.iter().all(|v| v.is_finite() && (-1.0..=1.0).contains(v)));
            }
        }
    }
}

#[test]
fn polishing_modes_refuse_missing_polish_parameters() {
    let cfg = tiny("polish_retrain");
    let models = initial(&tiny("retrained_estimator"));
    assert!(matches!(build_pipeline(&cfg, &models), Err(Error::Config(_))));
}

#[test]
fn repeated_runs_use_consecutive_seeds() {
    let cfg = tiny("retrained_estimator");
    let ds = tiny_data(&cfg);
    let reports = repeat_runs(&ds, &cfg, 2).unwrap();
    assert_eq!(reports.iter().map(|r| r.seed).collect::<Vec<_>>(), [cfg.optimizer.seed, cfg.optimizer.seed + 1]);
    assert_ne!(reports[0].config_fingerprint, reports[1].config_fingerprint);
    assert_eq!(reports[0], run_experiment(&ds, &cfg).unwrap().report);
    assert!(matches!(repeat_runs(&ds, &cfg, 1), Err(Error::InvalidArgument(_))));
}
