//! Training: sample preparation, the compound objective, Adam with a
//! staircase learning-rate decay, and the four pipeline modes.

use std::collections::BTreeMap;
use std::path::Path;

use bedpose_tensor::{Graph, Scalar, Tensor, Var};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colormap::{apply_colormap, Colormap};
use crate::error::{Error, Result};
use crate::losses::{heatmap_loss_node, paf_loss_node, pixel_loss_node, LossComponents, LossWeights, StageReduction};
use crate::networks::{
    load_checkpoint, read_tensor_set, save_checkpoint, update_running_stats, write_tensor_set, Bound, NetworkParams,
    PolishNetUSpec, PoseEstimatorSpec,
};
use crate::pressure::PressureFrame;
use crate::seeds::derive_seed;
use crate::skeleton::{
    render_heatmaps, render_pafs, FlipChannelMap, LimbGraph, MapStack, NUM_JOINTS, NUM_PAF_CHANNELS,
};

/// Which networks exist and which are trained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PipelineMode {
    /// Untrained estimator, evaluation only.
    FrozenEstimator,
    /// Estimator trained directly on colorized maps.
    RetrainedEstimator,
    /// Polishing network trained in front of a frozen estimator.
    PolishFrozen,
    /// Polishing network trained first, then the estimator (alone, or
    /// jointly with the polishing network when `fine_tune_polishnet`).
    PolishRetrain { fine_tune_polishnet: bool },
}

impl PipelineMode {
    pub const NAMES: [&'static str; 4] = ["frozen_estimator", "retrained_estimator", "polish_frozen", "polish_retrain"];

    pub fn parse(name: &str, fine_tune_polishnet: bool) -> Result<Self> {
        match name {
            "frozen_estimator" => Ok(PipelineMode::FrozenEstimator),
            "retrained_estimator" => Ok(PipelineMode::RetrainedEstimator),
            "polish_frozen" => Ok(PipelineMode::PolishFrozen),
            "polish_retrain" => Ok(PipelineMode::PolishRetrain { fine_tune_polishnet }),
            other => Err(Error::invalid(format!(
                "unknown pipeline mode `{other}` (expected one of {})",
                Self::NAMES.join(", ")
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PipelineMode::FrozenEstimator => "frozen_estimator",
            PipelineMode::RetrainedEstimator => "retrained_estimator",
            PipelineMode::PolishFrozen => "polish_frozen",
            PipelineMode::PolishRetrain { .. } => "polish_retrain",
        }
    }

    /// Name plus the fine-tuning flag where relevant.
    pub fn label(self) -> String {
        match self {
            PipelineMode::PolishRetrain { fine_tune_polishnet: true } => "polish_retrain+fine_tune".into(),
            m => m.name().into(),
        }
    }

    pub fn uses_polish(self) -> bool {
        matches!(self, PipelineMode::PolishFrozen | PipelineMode::PolishRetrain { .. })
    }

    pub fn fine_tune_polishnet(self) -> bool {
        matches!(self, PipelineMode::PolishRetrain { fine_tune_polishnet: true })
    }

    fn phases(self) -> Vec<Phase> {
        match self {
            PipelineMode::FrozenEstimator => vec![],
            PipelineMode::RetrainedEstimator => vec![Phase::EstimatorOnly],
            PipelineMode::PolishFrozen => vec![Phase::PolishOnly],
            PipelineMode::PolishRetrain { fine_tune_polishnet: false } => vec![Phase::PolishOnly, Phase::EstimatorOnly],
            PipelineMode::PolishRetrain { fine_tune_polishnet: true } => vec![Phase::PolishOnly, Phase::Joint],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    PolishOnly,
    EstimatorOnly,
    Joint,
}

impl Phase {
    fn trains_polish(self) -> bool {
        matches!(self, Phase::PolishOnly | Phase::Joint)
    }
    fn trains_estimator(self) -> bool {
        matches!(self, Phase::EstimatorOnly | Phase::Joint)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OptimizerConfig {
    pub learning_rate: f64,
    pub decay_rate: f64,
    pub decay_every_iters: u64,
    /// Epochs per training phase.
    pub epochs: usize,
    pub batch_size: usize,
    pub seed: u64,
    pub beta1: f64,
    pub beta2: f64,
    pub adam_eps: f64,
    pub bn_momentum: f64,
    /// Random horizontal flips (with left/right channel swaps) per sample.
    pub flip_augment: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            learning_rate: 1e-3,
            decay_rate: 0.95,
            decay_every_iters: 1000,
            epochs: 40,
            batch_size: 16,
            seed: 0,
            beta1: 0.9,
            beta2: 0.999,
            adam_eps: 1e-8,
            bn_momentum: 0.1,
            flip_augment: false,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0) || !self.learning_rate.is_finite() {
            return Err(Error::invalid(format!("learning_rate must be positive, got {}", self.learning_rate)));
        }
        if !(self.decay_rate > 0.0 && self.decay_rate <= 1.0) {
            return Err(Error::invalid(format!("decay_rate must lie in (0, 1], got {}", self.decay_rate)));
        }
        if self.decay_every_iters == 0 || self.batch_size == 0 {
            return Err(Error::invalid("decay_every_iters and batch_size must be positive"));
        }
        if !(0.0..=1.0).contains(&self.bn_momentum) {
            return Err(Error::invalid(format!("bn_momentum must lie in [0, 1], got {}", self.bn_momentum)));
        }
        Ok(())
    }

    /// Staircase decay: `lr · decay^floor(iter / every)`.
    pub fn lr_at(&self, iteration: u64) -> f64 {
        self.learning_rate * self.decay_rate.powi((iteration / self.decay_every_iters) as i32)
    }
}

/// How frames become network inputs and targets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SampleConfig {
    pub colormap: String,
    pub p_max: f32,
    /// `(width, height)` the colorized maps are resized to.
    pub working_resolution: (usize, usize),
    /// Heatmap Gaussian width, in grid cells.
    pub sigma: f64,
    /// PAF band half-width, in grid cells.
    pub limb_width: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            colormap: "viridis".into(),
            p_max: 100.0,
            working_resolution: (256, 256),
            sigma: 1.0,
            limb_width: 1.0,
        }
    }
}

/// One frame ready for training: signed image at working resolution and
/// rendered targets at heatmap resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingSample {
    pub id: String,
    pub image: Vec<f32>,
    pub heatmaps: MapStack,
    pub pafs: MapStack,
    pub heatmap_vis: [bool; NUM_JOINTS],
    pub paf_vis: [bool; NUM_PAF_CHANNELS],
    pub working_resolution: (usize, usize),
}

impl TrainingSample {
    pub fn flipped(&self, map: &FlipChannelMap) -> TrainingSample {
        let w = self.working_resolution.0;
        let mut image = self.image.clone();
        for row in image.chunks_exact_mut(w) {
            row.reverse();
        }
        let mut heatmap_vis = [false; NUM_JOINTS];
        for (c, &v) in self.heatmap_vis.iter().enumerate() {
            heatmap_vis[map.heatmap_perm[c]] = v;
        }
        let mut paf_vis = [false; NUM_PAF_CHANNELS];
        for (c, &v) in self.paf_vis.iter().enumerate() {
            paf_vis[map.paf_perm[c]] = v;
        }
        TrainingSample {
            id: format!("{}(flipped)", self.id),
            image,
            heatmaps: self.heatmaps.flipped(&map.heatmap_perm, None),
            pafs: self.pafs.flipped(&map.paf_perm, Some(&map.paf_sign)),
            heatmap_vis,
            paf_vis,
            working_resolution: self.working_resolution,
        }
    }
}

/// Colorizes, resizes and renders targets for labelled frames.
pub fn prepare_samples(
    frames: &[&PressureFrame],
    cfg: &SampleConfig,
    heatmap_resolution: (usize, usize),
    graph: &LimbGraph,
) -> Result<Vec<TrainingSample>> {
    use rayon::prelude::*;
    let cmap = Colormap::by_name(&cfg.colormap)?;
    frames.par_iter().map(|f| prepare_sample(f, cfg, &cmap, heatmap_resolution, graph)).collect()
}

fn prepare_sample(
    frame: &PressureFrame,
    cfg: &SampleConfig,
    cmap: &Colormap,
    heatmap_resolution: (usize, usize),
    graph: &LimbGraph,
) -> Result<TrainingSample> {
    let kps = frame
        .keypoints
        .as_ref()
        .ok_or_else(|| Error::invalid(format!("{}: training frames need keypoints", frame.label())))?;
    let (ww, wh) = cfg.working_resolution;
    let image = apply_colormap(frame, cmap, cfg.p_max)?.resized(ww, wh).to_signed();
    let (hw, hh) = heatmap_resolution;
    let scale = ((hw as f64 / frame.cols as f64) * (hh as f64 / frame.rows as f64)).sqrt();
    let local = kps.rescaled((frame.cols, frame.rows), heatmap_resolution);
    let heatmaps = render_heatmaps(&local, (hw, hh), cfg.sigma * scale)?;
    let (pafs, paf_vis) = render_pafs(&local, graph, (hw, hh), cfg.limb_width * scale)?;
    Ok(TrainingSample {
        id: frame.label(),
        image: image.data,
        heatmaps,
        pafs,
        heatmap_vis: kps.visibility(),
        paf_vis,
        working_resolution: cfg.working_resolution,
    })
}

/// Stacked tensors for one mini-batch.
#[derive(Debug, Clone)]
pub struct Batch<T> {
    pub images: Tensor<T>,
    pub heatmaps: Tensor<T>,
    pub pafs: Tensor<T>,
    pub heatmap_vis: Vec<[bool; NUM_JOINTS]>,
    pub paf_vis: Vec<[bool; NUM_PAF_CHANNELS]>,
}

impl<T: Scalar> Batch<T> {
    pub fn new(samples: &[&TrainingSample]) -> Result<Self> {
        let first = samples.first().ok_or_else(|| Error::invalid("empty batch"))?;
        let (w, h) = first.working_resolution;
        let (hc, hh, hw) = (NUM_JOINTS, first.heatmaps.height, first.heatmaps.width);
        let conv = |v: &[f32]| v.iter().map(|&x| T::lit(x as f64)).collect::<Vec<T>>();
        let n = samples.len();
        let images = samples.iter().flat_map(|s| conv(&s.image)).collect();
        let heatmaps = samples.iter().flat_map(|s| conv(&s.heatmaps.data)).collect();
        let pafs = samples.iter().flat_map(|s| conv(&s.pafs.data)).collect();
        Ok(Batch {
            images: Tensor::from_vec(&[n, 3, h, w], images),
            heatmaps: Tensor::from_vec(&[n, hc, hh, hw], heatmaps),
            pafs: Tensor::from_vec(&[n, NUM_PAF_CHANNELS, hh, hw], pafs),
            heatmap_vis: samples.iter().map(|s| s.heatmap_vis).collect(),
            paf_vis: samples.iter().map(|s| s.paf_vis).collect(),
        })
    }
}

/// Everything that defines a training run.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainSetup {
    pub mode: PipelineMode,
    pub polish: PolishNetUSpec,
    pub estimator: PoseEstimatorSpec,
    pub optimizer: OptimizerConfig,
    pub weights: LossWeights,
}

impl TrainSetup {
    pub fn validate(&self) -> Result<()> {
        self.optimizer.validate()?;
        self.weights.validate()?;
        self.estimator.validate()?;
        if self.mode.uses_polish() {
            self.polish.validate()?;
            if self.polish.resolution != self.estimator.input_resolution {
                return Err(Error::Config(format!(
                    "PolishNetU resolution {:?} differs from estimator input {:?}",
                    self.polish.resolution, self.estimator.input_resolution
                )));
            }
        }
        Ok(())
    }
}

/// Graph nodes of the objective.
#[derive(Debug, Clone, Copy)]
pub struct ObjectiveNodes {
    pub total: Var,
    pub heatmap: Var,
    pub paf: Option<Var>,
    pub pixel: Option<Var>,
}

/// Builds the weighted objective at training `progress`. Networks are
/// bound as given (their `frozen` flags decide gradients and whether batch
/// statistics are used when `train_mode`).
#[allow(clippy::type_complexity)]
pub fn build_objective<'p, T: Scalar>(
    g: &mut Graph<T>,
    setup: &TrainSetup,
    polish: Option<&'p NetworkParams<T>>,
    estimator: &'p NetworkParams<T>,
    batch: &Batch<T>,
    progress: f64,
    train_mode: bool,
) -> Result<(ObjectiveNodes, Option<Bound<'p, T>>, Bound<'p, T>)> {
    let x = g.input(batch.images.clone());
    let (est_in, pixel, pbound) = match polish {
        Some(p) => {
            let mut pb = Bound::new(g, p, train_mode);
            let y = setup.polish.forward(g, &mut pb, x)?;
            let pix = pixel_loss_node(g, y, batch.images.clone());
            (y, Some(pix), Some(pb))
        }
        None => (x, None, None),
    };
    let mut eb = Bound::new(g, estimator, train_mode);
    let stages = setup.estimator.forward(g, &mut eb, est_in)?;
    let r = match setup.weights.stage_reduction {
        StageReduction::Sum => 1.0,
        StageReduction::Mean => 1.0 / stages.len() as f64,
    };
    let mut hm_terms = Vec::new();
    let mut paf_terms = Vec::new();
    for s in &stages {
        hm_terms.push((heatmap_loss_node(g, s.heatmaps, batch.heatmaps.clone(), &batch.heatmap_vis), T::lit(r)));
        if let Some(p) = s.pafs {
            paf_terms.push((paf_loss_node(g, p, batch.pafs.clone(), &batch.paf_vis), T::lit(r)));
        }
    }
    let w = &setup.weights;
    let mut total_terms: Vec<(Var, T)> = hm_terms.iter().map(|&(v, c)| (v, c * T::lit(w.lambda_heatmap))).collect();
    total_terms.extend(paf_terms.iter().map(|&(v, c)| (v, c * T::lit(w.lambda_paf))));
    if let Some(p) = pixel {
        total_terms.push((p, T::lit(w.lambda_pixel(progress))));
    }
    let heatmap = g.weighted_sum(&hm_terms);
    let paf = (!paf_terms.is_empty()).then(|| g.weighted_sum(&paf_terms));
    let total = g.weighted_sum(&total_terms);
    Ok((ObjectiveNodes { total, heatmap, paf, pixel }, pbound, eb))
}

/// Adam moments for one network.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AdamState {
    pub step: u64,
    pub m: BTreeMap<String, Tensor<f32>>,
    pub v: BTreeMap<String, Tensor<f32>>,
}

impl AdamState {
    pub fn update(
        &mut self,
        params: &mut NetworkParams<f32>,
        grads: &BTreeMap<String, Tensor<f32>>,
        lr: f64,
        cfg: &OptimizerConfig,
    ) {
        if params.frozen {
            return;
        }
        self.step += 1;
        let t = self.step as i32;
        let bc1 = 1.0 - cfg.beta1.powi(t);
        let bc2 = 1.0 - cfg.beta2.powi(t);
        let (b1, b2) = (cfg.beta1 as f32, cfg.beta2 as f32);
        let step = (lr / bc1) as f32;
        let inv_bc2 = (1.0 / bc2) as f32;
        let eps = cfg.adam_eps as f32;
        for (name, g) in grads {
            let Some(p) = params.tensors.get_mut(name) else {
                continue;
            };
            let m = self.m.entry(name.clone()).or_insert_with(|| Tensor::zeros(g.shape()));
            let v = self.v.entry(name.clone()).or_insert_with(|| Tensor::zeros(g.shape()));
            for (((pi, gi), mi), vi) in
                p.data_mut().iter_mut().zip(g.data()).zip(m.data_mut().iter_mut()).zip(v.data_mut().iter_mut())
            {
                *mi = b1 * *mi + (1.0 - b1) * gi;
                *vi = b2 * *vi + (1.0 - b2) * gi * gi;
                *pi -= step * *mi / ((*vi * inv_bc2).sqrt() + eps);
            }
        }
    }
}

/// Current networks of a pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelState {
    pub polish: Option<NetworkParams<f32>>,
    pub estimator: NetworkParams<f32>,
}

impl ModelState {
    /// Fresh networks for `setup.mode`, seeded from the optimizer seed. The
    /// estimator is marked frozen in the modes that never train it.
    pub fn init(setup: &TrainSetup) -> Result<Self> {
        setup.validate()?;
        let seed = setup.optimizer.seed;
        let est_frozen = matches!(setup.mode, PipelineMode::FrozenEstimator | PipelineMode::PolishFrozen);
        let estimator = setup.estimator.init(derive_seed(seed, "init/estimator"))?.set_frozen(est_frozen);
        let polish =
            if setup.mode.uses_polish() { Some(setup.polish.init(derive_seed(seed, "init/polishnet"))?) } else { None };
        Ok(ModelState { polish, estimator })
    }
}

/// Resumable training progress.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainState {
    pub models: ModelState,
    pub adam_polish: AdamState,
    pub adam_estimator: AdamState,
    /// Index of the phase in progress.
    pub phase: usize,
    /// Next epoch to run within the phase.
    pub next_epoch: usize,
    /// Iterations completed over all phases.
    pub iteration: u64,
}

impl TrainState {
    pub fn new(models: ModelState) -> Self {
        TrainState {
            models,
            adam_polish: AdamState::default(),
            adam_estimator: AdamState::default(),
            phase: 0,
            next_epoch: 0,
            iteration: 0,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateFile {
    mode: String,
    phase: usize,
    next_epoch: usize,
    iteration: u64,
    adam_polish_step: u64,
    adam_estimator_step: u64,
}

fn write_adam(dir: &Path, adam: &AdamState) -> Result<()> {
    write_tensor_set(&dir.join("m"), &adam.m, "index.json")?;
    write_tensor_set(&dir.join("v"), &adam.v, "index.json")
}

fn read_adam(dir: &Path, step: u64) -> Result<AdamState> {
    Ok(AdamState {
        step,
        m: read_tensor_set(&dir.join("m"), "index.json")?,
        v: read_tensor_set(&dir.join("v"), "index.json")?,
    })
}

/// Writes everything needed to continue training bit-identically:
/// `state.json`, network checkpoints and Adam moments. The directory is
/// replaced atomically.
pub fn save_train_state(dir: &Path, setup: &TrainSetup, state: &TrainState) -> Result<()> {
    let tmp = dir.with_extension("partial");
    if tmp.exists() {
        std::fs::remove_dir_all(&tmp).map_err(|e| Error::io(&tmp, e))?;
    }
    std::fs::create_dir_all(&tmp).map_err(|e| Error::io(&tmp, e))?;
    let file = StateFile {
        mode: setup.mode.label(),
        phase: state.phase,
        next_epoch: state.next_epoch,
        iteration: state.iteration,
        adam_polish_step: state.adam_polish.step,
        adam_estimator_step: state.adam_estimator.step,
    };
    let text = serde_json::to_string_pretty(&file).expect("serializable") + "\n";
    let path = tmp.join("state.json");
    std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
    save_checkpoint(&tmp.join("estimator"), &setup.estimator, &state.models.estimator)?;
    write_adam(&tmp.join("adam_estimator"), &state.adam_estimator)?;
    if let Some(p) = &state.models.polish {
        save_checkpoint(&tmp.join("polishnet"), &setup.polish, p)?;
        write_adam(&tmp.join("adam_polishnet"), &state.adam_polish)?;
    }
    if dir.exists() {
        std::fs::remove_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::rename(&tmp, dir).map_err(|e| Error::io(dir, e))
}

/// Reads a directory written by [`save_train_state`]; the stored mode and
/// network specs must match `setup`.
pub fn load_train_state(dir: &Path, setup: &TrainSetup) -> Result<TrainState> {
    let path = dir.join("state.json");
    let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let file: StateFile =
        serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
    if file.mode != setup.mode.label() {
        return Err(Error::Checkpoint(format!(
            "{} holds a {} run, configuration asks for {}",
            dir.display(),
            file.mode,
            setup.mode.label()
        )));
    }
    let (_, estimator) = load_checkpoint(&dir.join("estimator"), Some(&setup.estimator))?;
    let polish = if setup.mode.uses_polish() {
        Some(load_checkpoint(&dir.join("polishnet"), Some(&setup.polish))?.1)
    } else {
        None
    };
    let adam_polish = if polish.is_some() {
        read_adam(&dir.join("adam_polishnet"), file.adam_polish_step)?
    } else {
        AdamState::default()
    };
    Ok(TrainState {
        models: ModelState { polish, estimator },
        adam_polish,
        adam_estimator: read_adam(&dir.join("adam_estimator"), file.adam_estimator_step)?,
        phase: file.phase,
        next_epoch: file.next_epoch,
        iteration: file.iteration,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogRow {
    pub iteration: u64,
    pub epoch: usize,
    pub lr: f64,
    pub loss_total: f64,
    pub loss_heatmap: f64,
    pub loss_paf: Option<f64>,
    pub loss_pixel: Option<f64>,
}

pub const LOG_HEADER: &str = "iteration,epoch,lr,loss_total,loss_heatmap,loss_paf,loss_pixel";

impl LogRow {
    pub fn csv_line(&self) -> String {
        let opt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x}"));
        format!(
            "{},{},{},{},{},{},{}",
            self.iteration,
            self.epoch,
            self.lr,
            self.loss_total,
            self.loss_heatmap,
            opt(self.loss_paf),
            opt(self.loss_pixel)
        )
    }
}

fn iters_per_epoch(n: usize, batch: usize) -> usize {
    n.div_ceil(batch)
}

/// Objective value of `models` on `samples` (one batch) at `progress`.
pub fn evaluate_objective(
    setup: &TrainSetup,
    models: &ModelState,
    samples: &[&TrainingSample],
    progress: f64,
) -> Result<(f64, LossComponents)> {
    let batch = Batch::<f32>::new(samples)?;
    let mut g = Graph::new();
    let (nodes, _, _) =
        build_objective(&mut g, setup, models.polish.as_ref(), &models.estimator, &batch, progress, true)?;
    let comps = LossComponents {
        heatmap: g.value(nodes.heatmap).item() as f64,
        paf: nodes.paf.map(|v| g.value(v).item() as f64),
        pixel: nodes.pixel.map(|v| g.value(v).item() as f64),
    };
    Ok((g.value(nodes.total).item() as f64, comps))
}

/// Runs (or resumes) training. `on_epoch` is called after every epoch with
/// the current state and the log rows of that epoch.
pub fn train(
    setup: &TrainSetup,
    samples: &[TrainingSample],
    resume: Option<TrainState>,
    mut on_epoch: impl FnMut(&TrainState, &[LogRow]) -> Result<()>,
) -> Result<(TrainState, Vec<LogRow>)> {
    setup.validate()?;
    let mut state = match resume {
        Some(s) => s,
        None => TrainState::new(ModelState::init(setup)?),
    };
    let phases = setup.mode.phases();
    if phases.is_empty() {
        return Ok((state, Vec::new()));
    }
    if samples.is_empty() {
        return Err(Error::Training("training set is empty".into()));
    }
    let cfg = &setup.optimizer;
    let flip_map = FlipChannelMap::new(&LimbGraph::canonical())?;
    let per_epoch = iters_per_epoch(samples.len(), cfg.batch_size);
    let phase_iters = (per_epoch * cfg.epochs) as u64;
    let mut log = Vec::new();
    while state.phase < phases.len() {
        let phase = phases[state.phase];
        while state.next_epoch < cfg.epochs {
            let epoch = state.next_epoch;
            let mut order: Vec<usize> = (0..samples.len()).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(derive_seed(
                cfg.seed,
                &format!("shuffle/{}/{epoch}", state.phase),
            )));
            let mut flip_rng =
                ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, &format!("flip/{}/{epoch}", state.phase)));
            let flips: Vec<bool> = order.iter().map(|_| cfg.flip_augment && flip_rng.random::<bool>()).collect();
            let mut rows = Vec::with_capacity(per_epoch);
            for (b, chunk) in order.chunks(cfg.batch_size).enumerate() {
                let flipped: Vec<TrainingSample> = chunk
                    .iter()
                    .zip(&flips[b * cfg.batch_size..])
                    .filter(|(_, f)| **f)
                    .map(|(&i, _)| samples[i].flipped(&flip_map))
                    .collect();
                let mut fl = flipped.iter();
                let batch: Vec<&TrainingSample> = chunk
                    .iter()
                    .zip(&flips[b * cfg.batch_size..])
                    .map(|(&i, f)| if *f { fl.next().expect("flipped sample") } else { &samples[i] })
                    .collect();
                let local_iter = (epoch * per_epoch + b) as u64;
                let progress = local_iter as f64 / (phase_iters.max(2) - 1) as f64;
                let lr = cfg.lr_at(local_iter);
                let comps = train_step(setup, &mut state, phase, &batch, progress, lr)
                    .map_err(|e| annotate(e, &state, epoch, &batch))?;
                state.iteration += 1;
                rows.push(LogRow {
                    iteration: state.iteration,
                    epoch: state.phase * cfg.epochs + epoch,
                    lr,
                    loss_total: comps.0,
                    loss_heatmap: comps.1.heatmap,
                    loss_paf: comps.1.paf,
                    loss_pixel: comps.1.pixel,
                });
            }
            state.next_epoch += 1;
            log::debug!(
                "phase {} epoch {epoch}: last loss {:.6} after iteration {}",
                state.phase,
                rows.last().map_or(f64::NAN, |r| r.loss_total),
                state.iteration
            );
            on_epoch(&state, &rows)?;
            log.extend(rows);
        }
        state.phase += 1;
        state.next_epoch = 0;
    }
    Ok((state, log))
}

fn annotate(e: Error, state: &TrainState, epoch: usize, batch: &[&TrainingSample]) -> Error {
    match e {
        Error::Training(msg) => {
            let ids: Vec<&str> = batch.iter().map(|s| s.id.as_str()).collect();
            Error::Training(format!(
                "{msg} at iteration {} (phase {}, epoch {epoch}); batch frames: {}",
                state.iteration + 1,
                state.phase,
                ids.join(", ")
            ))
        }
        other => other,
    }
}

fn train_step(
    setup: &TrainSetup,
    state: &mut TrainState,
    phase: Phase,
    samples: &[&TrainingSample],
    progress: f64,
    lr: f64,
) -> Result<(f64, LossComponents)> {
    let polish = state.models.polish.as_ref().map(|p| p.clone().set_frozen(!phase.trains_polish()));
    let estimator = state.models.estimator.clone().set_frozen(!phase.trains_estimator());
    let batch = Batch::<f32>::new(samples)?;
    let mut g = Graph::new();
    let (nodes, pb, eb) = build_objective(&mut g, setup, polish.as_ref(), &estimator, &batch, progress, true)?;
    let total = g.value(nodes.total).item() as f64;
    if !total.is_finite() {
        return Err(Error::Training(format!("non-finite loss {total}")));
    }
    let comps = LossComponents {
        heatmap: g.value(nodes.heatmap).item() as f64,
        paf: nodes.paf.map(|v| g.value(v).item() as f64),
        pixel: nodes.pixel.map(|v| g.value(v).item() as f64),
    };
    let grads = g.backward(nodes.total);
    let cfg = &setup.optimizer;
    if let (Some(pb), Some(model), true) = (pb, state.models.polish.as_mut(), phase.trains_polish()) {
        let was_frozen = model.frozen;
        model.frozen = false;
        state.adam_polish.update(model, &pb.gradients(&grads), lr, cfg);
        update_running_stats(model, &pb.batch_statistics(&g), cfg.bn_momentum);
        model.frozen = was_frozen;
    }
    if phase.trains_estimator() {
        let model = &mut state.models.estimator;
        let was_frozen = model.frozen;
        model.frozen = false;
        state.adam_estimator.update(model, &eb.gradients(&grads), lr, cfg);
        update_running_stats(model, &eb.batch_statistics(&g), cfg.bn_momentum);
        model.frozen = was_frozen;
    }
    Ok((total, comps))
}
