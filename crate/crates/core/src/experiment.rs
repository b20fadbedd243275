//! End-to-end runs: clean, split by subject, train one pipeline mode,
//! predict the held-out subjects and evaluate. Also repeated runs over
//! consecutive seeds and content fingerprints for run directories.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::colormap::Colormap;
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::evaluation::{evaluate, EvalConfig, EvalSample, EvaluationReport, ReportMeta};
use crate::inference::{Colorizer, InferenceConfig, InternalEstimator, Pipeline, Prediction};
use crate::losses::LossWeights;
use crate::networks::{PolishNetUSpec, PoseEstimatorSpec};
use crate::pressure::{
    preprocess_sequences, split_leave_subjects_out, DatasetSplit, PreprocessConfig, PreprocessLog, PressureFrame,
    PressureSequence,
};
use crate::skeleton::{FlipChannelMap, LimbGraph};
use crate::synthetic::SyntheticConfig;
use crate::training::{
    prepare_samples, train, LogRow, ModelState, OptimizerConfig, PipelineMode, SampleConfig, TrainSetup, TrainState,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SplitConfig {
    /// The last `n_test` subjects (in dataset order) are held out.
    pub n_test: usize,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig { n_test: 2 }
    }
}

/// Every setting of a run, as stored in run directories.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub mode: String,
    pub fine_tune_polishnet: bool,
    pub preprocessing: PreprocessConfig,
    pub split: SplitConfig,
    pub sample: SampleConfig,
    pub estimator: PoseEstimatorSpec,
    pub polishnet: PolishNetUSpec,
    pub optimizer: OptimizerConfig,
    pub loss: LossWeights,
    pub inference: InferenceConfig,
    pub evaluation: EvalConfig,
    /// Read by the `synth` command only.
    pub synthetic: SyntheticConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            mode: "polish_retrain".into(),
            fine_tune_polishnet: true,
            preprocessing: PreprocessConfig::default(),
            split: SplitConfig::default(),
            sample: SampleConfig::default(),
            estimator: PoseEstimatorSpec::default(),
            polishnet: PolishNetUSpec::default(),
            optimizer: OptimizerConfig::default(),
            loss: LossWeights::default(),
            inference: InferenceConfig::default(),
            evaluation: EvalConfig::default(),
            synthetic: SyntheticConfig::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn pipeline_mode(&self) -> Result<PipelineMode> {
        PipelineMode::parse(&self.mode, self.fine_tune_polishnet)
    }

    pub fn setup(&self) -> Result<TrainSetup> {
        let setup = TrainSetup {
            mode: self.pipeline_mode()?,
            polish: self.polishnet.clone(),
            estimator: self.estimator.clone(),
            optimizer: self.optimizer.clone(),
            weights: self.loss.clone(),
        };
        setup.validate()?;
        if self.sample.working_resolution != self.estimator.input_resolution {
            return Err(Error::Config(format!(
                "working resolution {:?} differs from estimator input {:?}",
                self.sample.working_resolution, self.estimator.input_resolution
            )));
        }
        Ok(setup)
    }

    pub fn colorizer(&self) -> Result<Colorizer> {
        Ok(Colorizer {
            colormap: Colormap::by_name(&self.sample.colormap)?,
            p_max: self.sample.p_max,
            working_resolution: self.sample.working_resolution,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Hex SHA-256 over the dataset contents (ids, indices, values, labels).
pub fn dataset_fingerprint(ds: &Dataset) -> String {
    let mut h = Sha256::new();
    h.update(ds.sensor_pitch_mm.to_le_bytes());
    h.update((ds.rows as u64).to_le_bytes());
    h.update((ds.cols as u64).to_le_bytes());
    for s in &ds.sequences {
        h.update(s.subject_id.as_bytes());
        h.update([0]);
        h.update(s.sequence_id.as_bytes());
        h.update([0]);
        for f in &s.frames {
            h.update((f.frame_index as u64).to_le_bytes());
            for v in &f.values {
                h.update(v.to_le_bytes());
            }
            if let Some(k) = &f.keypoints {
                for j in &k.joints {
                    h.update(j.x.to_le_bytes());
                    h.update(j.y.to_le_bytes());
                    h.update([u8::from(j.visible)]);
                }
            }
        }
    }
    format!("{:x}", h.finalize())
}

/// Hex SHA-256 of the config JSON and the dataset fingerprint.
pub fn run_fingerprint(cfg: &ExperimentConfig, ds: &Dataset) -> String {
    let mut h = Sha256::new();
    h.update(cfg.to_json().as_bytes());
    h.update(dataset_fingerprint(ds).as_bytes());
    format!("{:x}", h.finalize())
}

/// Cleaned, split data ready for training and evaluation.
#[derive(Debug, Clone)]
pub struct PreparedData {
    pub split: DatasetSplit,
    pub train_frames: Vec<PressureFrame>,
    pub test_frames: Vec<PressureFrame>,
    pub preprocess_log: Option<PreprocessLog>,
    pub sensor_pitch_mm: f64,
}

/// Sequences after the cleaning chain, which is skipped when the dataset
/// records that it was already applied.
pub fn cleaned_sequences(
    ds: &Dataset,
    cfg: &ExperimentConfig,
) -> Result<(Vec<PressureSequence>, Option<PreprocessLog>)> {
    match &ds.preprocessing {
        Some(_) => Ok((ds.sequences.clone(), None)),
        None => {
            let (s, l) = preprocess_sequences(&ds.sequences, &cfg.preprocessing)?;
            Ok((s, Some(l)))
        }
    }
}

/// Cleans the dataset and applies the configured leave-subjects-out split.
pub fn prepare_data(ds: &Dataset, cfg: &ExperimentConfig) -> Result<PreparedData> {
    let split = split_leave_subjects_out(&ds.subjects(), cfg.split.n_test)?;
    prepare_data_with_split(ds, cfg, split)
}

/// Like [`prepare_data`] with an explicit split, whose subjects must all
/// occur in the dataset.
pub fn prepare_data_with_split(ds: &Dataset, cfg: &ExperimentConfig, split: DatasetSplit) -> Result<PreparedData> {
    let known = ds.subjects();
    if let Some(s) = split.train_subjects.iter().chain(&split.test_subjects).find(|s| !known.contains(s)) {
        return Err(Error::invalid(format!("split names subject `{s}`, which the dataset does not contain")));
    }
    if let Some(s) = split.train_subjects.intersection(&split.test_subjects).next() {
        return Err(Error::invalid(format!("subject `{s}` is in both train and test sets")));
    }
    let (sequences, log) = cleaned_sequences(ds, cfg)?;
    let pick = |set: &std::collections::BTreeSet<String>| -> Vec<PressureFrame> {
        sequences
            .iter()
            .filter(|s| set.contains(&s.subject_id))
            .flat_map(|s| s.frames.iter().filter(|f| f.keypoints.is_some()).cloned())
            .collect()
    };
    let train_frames = pick(&split.train_subjects);
    let test_frames = pick(&split.test_subjects);
    if test_frames.is_empty() {
        return Err(Error::Evaluation("no labelled frames among the held-out subjects".into()));
    }
    Ok(PreparedData { train_frames, test_frames, preprocess_log: log, split, sensor_pitch_mm: ds.sensor_pitch_mm })
}

/// Report metadata for `cfg` on `ds`.
pub fn report_meta(cfg: &ExperimentConfig, ds: &Dataset) -> Result<ReportMeta> {
    Ok(ReportMeta {
        label: cfg.pipeline_mode()?.label(),
        seed: cfg.optimizer.seed,
        config_fingerprint: run_fingerprint(cfg, ds),
    })
}

/// Trains the configured mode on the prepared training frames.
pub fn train_models(
    data: &PreparedData,
    cfg: &ExperimentConfig,
    resume: Option<TrainState>,
    on_epoch: impl FnMut(&TrainState, &[LogRow]) -> Result<()>,
) -> Result<(TrainState, Vec<LogRow>)> {
    let setup = cfg.setup()?;
    if setup.mode == PipelineMode::FrozenEstimator {
        return Ok((resume.unwrap_or(TrainState::new(ModelState::init(&setup)?)), Vec::new()));
    }
    let refs: Vec<&PressureFrame> = data.train_frames.iter().collect();
    let samples = prepare_samples(&refs, &cfg.sample, cfg.estimator.heatmap_resolution, &LimbGraph::canonical())?;
    train(&setup, &samples, resume, on_epoch)
}

pub fn build_pipeline(cfg: &ExperimentConfig, models: &ModelState) -> Result<Pipeline> {
    let mode = cfg.pipeline_mode()?;
    let polish = match (&models.polish, mode.uses_polish()) {
        (Some(p), true) => Some((cfg.polishnet.clone(), p.clone())),
        (None, true) => return Err(Error::Config(format!("mode {} needs PolishNetU parameters", mode.name()))),
        _ => None,
    };
    Ok(Pipeline {
        colorizer: cfg.colorizer()?,
        polish,
        estimator: Box::new(InternalEstimator { spec: cfg.estimator.clone(), params: models.estimator.clone() }),
        config: cfg.inference.clone(),
        flip_map: FlipChannelMap::new(&LimbGraph::canonical())?,
    })
}

/// Pairs predictions with the ground truth of their frames and evaluates.
pub fn evaluate_predictions(
    frames: &[PressureFrame],
    preds: &[Prediction],
    sensor_pitch_mm: f64,
    cfg: &EvalConfig,
    meta: &ReportMeta,
) -> Result<EvaluationReport> {
    let samples = frames
        .iter()
        .zip(preds)
        .filter_map(|(f, p)| f.keypoints.map(|gt| EvalSample { frame_id: f.label(), pred: p.keypoints, gt }))
        .collect::<Vec<_>>();
    evaluate(&samples, sensor_pitch_mm, cfg, meta)
}

/// Everything produced by one run.
#[derive(Debug, Clone)]
pub struct ExperimentOutcome {
    pub report: EvaluationReport,
    pub state: TrainState,
    pub log: Vec<LogRow>,
    pub predictions: Vec<Prediction>,
    pub data: PreparedData,
}

pub fn run_experiment(ds: &Dataset, cfg: &ExperimentConfig) -> Result<ExperimentOutcome> {
    let data = prepare_data(ds, cfg)?;
    let (state, log) = train_models(&data, cfg, None, |_, _| Ok(()))?;
    let pipeline = build_pipeline(cfg, &state.models)?;
    let test: Vec<&PressureFrame> = data.test_frames.iter().collect();
    let predictions = pipeline.predict(&test)?;
    let meta = report_meta(cfg, ds)?;
    let report = evaluate_predictions(&data.test_frames, &predictions, data.sensor_pitch_mm, &cfg.evaluation, &meta)?;
    Ok(ExperimentOutcome { report, state, log, predictions, data })
}

/// `n` independent runs with seeds `seed, seed + 1, …`.
pub fn repeat_runs(ds: &Dataset, cfg: &ExperimentConfig, n: usize) -> Result<Vec<EvaluationReport>> {
    if n < 2 {
        return Err(Error::invalid(format!("repeat_runs needs n >= 2, got {n}")));
    }
    (0..n as u64)
        .map(|i| {
            let mut c = cfg.clone();
            c.optimizer.seed = cfg.optimizer.seed + i;
            run_experiment(ds, &c).map(|o| o.report)
        })
        .collect()
}
