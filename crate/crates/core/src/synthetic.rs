//! Deterministic synthetic pressure data: capsule-kernel limbs, elliptical
//! torso and head masses, per-sequence weak-pressure attenuation and
//! sensor noise, with exact keypoint labels.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::annotations::AnnotationFile;
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::pressure::{PressureFrame, PressureSequence};
use crate::seeds::derive_seed;
use crate::skeleton::{point_segment_distance, JointName, Keypoint, KeypointSet, LimbGraph, NUM_JOINTS, NUM_LIMBS};

/// Upper bound of the rendered pressure, mmHg.
pub const P_MAX: f32 = 100.0;

/// Limb-graph edges eligible for attenuation (arms and legs).
pub const EXTREMITY_EDGES: [usize; 8] = [2, 3, 5, 6, 8, 9, 11, 12];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SyntheticConfig {
    pub seed: u64,
    pub n_subjects: usize,
    pub frames_per_subject: usize,
    pub sequences_per_subject: usize,
    pub grid_rows: usize,
    pub grid_cols: usize,
    pub sensor_pitch_mm: f64,
    /// Zero-mean Gaussian sensor noise, mmHg.
    pub noise_sigma: f64,
    /// Probability that a sequence carries weak-pressure limbs.
    pub attenuation_probability: f64,
    /// Range of the multiplicative factor applied to attenuated limbs.
    pub attenuation_range: (f64, f64),
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig {
            seed: 0,
            n_subjects: 8,
            frames_per_subject: 80,
            sequences_per_subject: 4,
            grid_rows: 64,
            grid_cols: 32,
            sensor_pitch_mm: 25.4,
            noise_sigma: 2.0,
            attenuation_probability: 0.5,
            attenuation_range: (0.0, 0.3),
        }
    }
}

impl SyntheticConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_subjects < 2 {
            return Err(Error::invalid(format!("need at least 2 subjects, got {}", self.n_subjects)));
        }
        if self.grid_rows < 24 || self.grid_cols < 12 {
            return Err(Error::invalid(format!(
                "grid {}x{} is too small for a body (minimum 24x12)",
                self.grid_rows, self.grid_cols
            )));
        }
        if self.sequences_per_subject == 0 || self.frames_per_subject < self.sequences_per_subject {
            return Err(Error::invalid(format!(
                "{} frames cannot fill {} sequences per subject",
                self.frames_per_subject, self.sequences_per_subject
            )));
        }
        if !(self.sensor_pitch_mm > 0.0) || !(self.noise_sigma >= 0.0) {
            return Err(Error::invalid("sensor pitch must be positive and noise sigma non-negative"));
        }
        let (lo, hi) = self.attenuation_range;
        if !(0.0..=1.0).contains(&self.attenuation_probability) || !(0.0 <= lo && lo <= hi && hi <= 1.0) {
            return Err(Error::invalid("attenuation probability and range must lie in [0, 1]"));
        }
        Ok(())
    }
}

/// Segment-length multipliers shared by both body sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimbRatios {
    pub upper_arm: f64,
    pub forearm: f64,
    pub thigh: f64,
    pub shank: f64,
    pub torso: f64,
    pub shoulder_width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSubject {
    pub subject_id: String,
    pub height_cm: f64,
    pub weight_kg: f64,
    pub ratios: LimbRatios,
    /// Peak torso pressure before summation with limbs, mmHg.
    pub base_pressure: f64,
}

impl SyntheticSubject {
    fn sample(index: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut r = || rng.random_range(0.94..1.06);
        let ratios =
            LimbRatios { upper_arm: r(), forearm: r(), thigh: r(), shank: r(), torso: r(), shoulder_width: r() };
        let height_cm = rng.random_range(160.0..186.0);
        let weight_kg = rng.random_range(45.0..100.0);
        SyntheticSubject {
            subject_id: format!("S{:02}", index + 1),
            height_cm,
            weight_kg,
            ratios,
            base_pressure: 40.0 + 25.0 * (weight_kg - 45.0) / 55.0,
        }
    }

    /// Segment lengths in grid cells for a grid `rows` tall.
    fn segments(&self, rows: usize) -> Segments {
        let h = 0.74 * rows as f64 * self.height_cm / 186.0;
        let r = &self.ratios;
        Segments {
            head: 0.10 * h,
            shoulder: 0.13 * h * r.shoulder_width,
            hip: 0.09 * h * r.shoulder_width,
            torso: 0.30 * h * r.torso,
            upper_arm: 0.186 * h * r.upper_arm,
            forearm: 0.146 * h * r.forearm,
            thigh: 0.245 * h * r.thigh,
            shank: 0.246 * h * r.shank,
            limb_radius: 0.022 * h * (0.85 + 0.3 * (self.weight_kg - 45.0) / 55.0),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Segments {
    head: f64,
    shoulder: f64,
    hip: f64,
    torso: f64,
    upper_arm: f64,
    forearm: f64,
    thigh: f64,
    shank: f64,
    limb_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PostureFamily {
    Supine,
    LeftSide,
    RightSide,
}

impl PostureFamily {
    const CYCLE: [PostureFamily; 4] =
        [PostureFamily::Supine, PostureFamily::LeftSide, PostureFamily::RightSide, PostureFamily::Supine];

    pub fn name(self) -> &'static str {
        match self {
            PostureFamily::Supine => "supine",
            PostureFamily::LeftSide => "left_side",
            PostureFamily::RightSide => "right_side",
        }
    }
}

/// Joint angles (radians) of one frame, relative to the body axis pointing
/// toward the feet. Positive arm/leg angles point toward the subject's left.
#[derive(Debug, Clone, Copy)]
struct Angles {
    axis: f64,
    head: f64,
    upper_arm: [f64; 2],
    elbow: [f64; 2],
    thigh: [f64; 2],
    knee: [f64; 2],
    width: f64,
}

const DEG: f64 = PI / 180.0;

/// Base angles and oscillation amplitudes for a posture family.
fn sample_base(family: PostureFamily, rng: &mut ChaCha8Rng) -> (Angles, Angles) {
    let mut u = |lo: f64, hi: f64| rng.random_range(lo..hi) * DEG;
    match family {
        PostureFamily::Supine => {
            let base = Angles {
                axis: u(-8.0, 8.0),
                head: u(-12.0, 12.0),
                upper_arm: [u(5.0, 35.0), -u(5.0, 35.0)],
                elbow: [u(-20.0, 60.0), -u(-20.0, 60.0)],
                thigh: [u(2.0, 14.0), -u(2.0, 14.0)],
                knee: [u(-8.0, 10.0), -u(-8.0, 10.0)],
                width: 1.0,
            };
            let amp = Angles {
                axis: u(0.0, 3.0),
                head: u(0.0, 8.0),
                upper_arm: [u(0.0, 12.0), u(0.0, 12.0)],
                elbow: [u(0.0, 25.0), u(0.0, 25.0)],
                thigh: [u(0.0, 5.0), u(0.0, 5.0)],
                knee: [u(0.0, 8.0), u(0.0, 8.0)],
                width: 0.0,
            };
            (base, amp)
        }
        // Lying on the left side, facing the subject's left (+x): the lower
        // limbs reach forward less than the upper ones.
        PostureFamily::LeftSide | PostureFamily::RightSide => {
            let base = Angles {
                axis: u(-8.0, 8.0),
                head: u(0.0, 15.0),
                upper_arm: [u(55.0, 85.0), u(10.0, 35.0)],
                elbow: [u(-10.0, 30.0), u(20.0, 70.0)],
                thigh: [u(0.0, 10.0), u(30.0, 55.0)],
                knee: [u(-5.0, 5.0), -u(30.0, 70.0)],
                width: 0.35,
            };
            let amp = Angles {
                axis: u(0.0, 3.0),
                head: u(0.0, 6.0),
                upper_arm: [u(0.0, 8.0), u(0.0, 8.0)],
                elbow: [u(0.0, 15.0), u(0.0, 15.0)],
                thigh: [u(0.0, 4.0), u(0.0, 8.0)],
                knee: [u(0.0, 4.0), u(0.0, 12.0)],
                width: 0.0,
            };
            (base, amp)
        }
    }
}

fn oscillate(base: &Angles, amp: &Angles, phase: &[f64; 11], freq: f64, t: f64) -> Angles {
    let s = |k: usize| (2.0 * PI * freq * t + phase[k]).sin();
    Angles {
        axis: base.axis + amp.axis * s(0),
        head: base.head + amp.head * s(1),
        upper_arm: [base.upper_arm[0] + amp.upper_arm[0] * s(2), base.upper_arm[1] + amp.upper_arm[1] * s(3)],
        elbow: [base.elbow[0] + amp.elbow[0] * s(4), base.elbow[1] + amp.elbow[1] * s(5)],
        thigh: [base.thigh[0] + amp.thigh[0] * s(6), base.thigh[1] + amp.thigh[1] * s(7)],
        knee: [base.knee[0] + amp.knee[0] * s(8), base.knee[1] + amp.knee[1] * s(9)],
        width: base.width,
    }
}

/// Unit direction at `angle` from the feet-pointing body axis (`axis`).
fn dir(axis: f64, angle: f64) -> (f64, f64) {
    let a = axis + angle;
    (a.sin(), a.cos())
}

/// Places the skeleton with the neck at the origin.
fn pose_at_origin(seg: &Segments, a: &Angles) -> [(f64, f64); NUM_JOINTS] {
    use JointName::*;
    let mut p = [(0.0, 0.0); NUM_JOINTS];
    let down = dir(a.axis, 0.0);
    let side = (down.1, -down.0);
    let add = |o: (f64, f64), d: (f64, f64), l: f64| (o.0 + d.0 * l, o.1 + d.1 * l);
    let hd = dir(a.axis, PI + a.head);
    p[Head.index()] = add((0.0, 0.0), hd, seg.head);
    let pelvis = add((0.0, 0.0), down, seg.torso);
    for (k, s) in [(0usize, 1.0), (1, -1.0)] {
        let (sh, el, wr, hip, kn, an) = if k == 0 {
            (LeftShoulder, LeftElbow, LeftWrist, LeftHip, LeftKnee, LeftAnkle)
        } else {
            (RightShoulder, RightElbow, RightWrist, RightHip, RightKnee, RightAnkle)
        };
        let shoulder = add((0.0, 0.0), side, s * seg.shoulder * a.width);
        let elbow = add(shoulder, dir(a.axis, a.upper_arm[k]), seg.upper_arm);
        let wrist = add(elbow, dir(a.axis, a.upper_arm[k] + a.elbow[k]), seg.forearm);
        let hip_p = add(pelvis, side, s * seg.hip * a.width);
        let knee = add(hip_p, dir(a.axis, a.thigh[k]), seg.thigh);
        let ankle = add(knee, dir(a.axis, a.thigh[k] + a.knee[k]), seg.shank);
        p[sh.index()] = shoulder;
        p[el.index()] = elbow;
        p[wr.index()] = wrist;
        p[hip.index()] = hip_p;
        p[kn.index()] = knee;
        p[an.index()] = ankle;
    }
    p
}

fn bbox(p: &[(f64, f64)]) -> (f64, f64, f64, f64) {
    p.iter().fold((f64::MAX, f64::MAX, f64::MIN, f64::MIN), |(x0, y0, x1, y1), &(x, y)| {
        (x0.min(x), y0.min(y), x1.max(x), y1.max(y))
    })
}

/// Keypoints stay this many cells inside the grid border.
const MARGIN: f64 = 1.5;

const MAX_POSE_ATTEMPTS: usize = 500;

/// Weak-pressure limbs of a sequence: `(edge index, factor)`.
pub type Attenuation = Vec<(usize, f64)>;

/// Per-frame generation record kept alongside the dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneInfo {
    pub subject_id: String,
    pub sequence_id: String,
    pub frame_index: usize,
    pub posture: PostureFamily,
    pub attenuation: Attenuation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticData {
    pub dataset: Dataset,
    pub subjects: Vec<SyntheticSubject>,
    pub scenes: Vec<SceneInfo>,
}

/// Sidecar written next to a generated manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSidecar {
    pub config: SyntheticConfig,
    pub subjects: Vec<SyntheticSubject>,
    pub scenes: Vec<SceneInfo>,
}

/// Renders one pressure frame (before noise) for labelled keypoints.
pub fn render_pressure(
    kps: &KeypointSet,
    subject: &SyntheticSubject,
    rows: usize,
    cols: usize,
    attenuation: &[(usize, f64)],
) -> Vec<f32> {
    use JointName::*;
    let seg = subject.segments(rows);
    let graph = LimbGraph::canonical();
    let pt = |j: JointName| (kps[j].x, kps[j].y);
    let neck = pt(Neck);
    let pelvis = {
        let (l, r) = (pt(LeftHip), pt(RightHip));
        ((l.0 + r.0) / 2.0, (l.1 + r.1) / 2.0)
    };
    let (ax, ay) = (pelvis.0 - neck.0, pelvis.1 - neck.1);
    let torso_len = (ax * ax + ay * ay).sqrt().max(1e-6);
    let (ux, uy) = (ax / torso_len, ay / torso_len);
    let center = ((neck.0 + pelvis.0) / 2.0, (neck.1 + pelvis.1) / 2.0);
    let shoulder_w = pt(LeftShoulder).0 - pt(RightShoulder).0;
    let shoulder_w = (shoulder_w.powi(2) + (pt(LeftShoulder).1 - pt(RightShoulder).1).powi(2)).sqrt();
    let semi_long = 0.55 * torso_len;
    let semi_short = (0.42 * shoulder_w).max(0.8 * seg.limb_radius + 1.0);
    let head = pt(Head);
    let head_r = 0.45 * seg.head;
    let factors: Vec<f64> =
        (0..NUM_LIMBS).map(|e| attenuation.iter().find(|(i, _)| *i == e).map_or(1.0, |(_, f)| *f)).collect();
    let amplitude = |e: usize| -> f64 {
        match e {
            0 => 0.35,
            2 | 5 => 0.55,
            3 | 6 => 0.45,
            8 | 11 => 0.7,
            9 | 12 => 0.55,
            _ => 0.25,
        }
    };
    let base = subject.base_pressure;
    let r2 = 2.0 * seg.limb_radius * seg.limb_radius;
    let mut out = vec![0f32; rows * cols];
    for y in 0..rows {
        for x in 0..cols {
            let (px, py) = (x as f64, y as f64);
            let (dx, dy) = (px - center.0, py - center.1);
            let along = dx * ux + dy * uy;
            let across = -dx * uy + dy * ux;
            let rho = ((along / semi_long).powi(2) + (across / semi_short).powi(2)).sqrt();
            let mut p = 0.75 / (1.0 + ((rho - 1.0) / 0.12).exp());
            let hr = ((px - head.0).powi(2) + (py - head.1).powi(2)).sqrt() / head_r;
            p += 0.6 / (1.0 + ((hr - 1.0) / 0.15).exp());
            for (e, &(a, b)) in graph.edges().iter().enumerate() {
                let d = point_segment_distance(px, py, &kps[a], &kps[b]);
                p += amplitude(e) * factors[e] * (-d * d / r2).exp();
            }
            out[y * cols + x] = (base * p).min(P_MAX as f64) as f32;
        }
    }
    out
}

struct SequencePlan {
    subject: usize,
    seq: usize,
    family: PostureFamily,
    frames: usize,
}

/// Generates the full dataset; identical configs give identical output.
pub fn generate_dataset(cfg: &SyntheticConfig) -> Result<SyntheticData> {
    cfg.validate()?;
    let subjects: Vec<SyntheticSubject> = (0..cfg.n_subjects)
        .map(|i| {
            SyntheticSubject::sample(i, &mut ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, &format!("subject/{i}"))))
        })
        .collect();
    let mut plans = Vec::new();
    for s in 0..cfg.n_subjects {
        for q in 0..cfg.sequences_per_subject {
            let frames = cfg.frames_per_subject / cfg.sequences_per_subject
                + usize::from(q < cfg.frames_per_subject % cfg.sequences_per_subject);
            plans.push(SequencePlan { subject: s, seq: q, family: PostureFamily::CYCLE[q % 4], frames });
        }
    }
    let generated: Vec<(PressureSequence, Vec<SceneInfo>)> =
        plans.par_iter().map(|p| generate_sequence(cfg, &subjects[p.subject], p)).collect::<Result<_>>()?;
    let (sequences, scenes): (Vec<_>, Vec<_>) = generated.into_iter().unzip();
    Ok(SyntheticData {
        dataset: Dataset {
            name: format!("synthetic-seed{}", cfg.seed),
            sensor_pitch_mm: cfg.sensor_pitch_mm,
            rows: cfg.grid_rows,
            cols: cfg.grid_cols,
            sequences,
            preprocessing: None,
        },
        subjects,
        scenes: scenes.into_iter().flatten().collect(),
    })
}

fn generate_sequence(
    cfg: &SyntheticConfig,
    subject: &SyntheticSubject,
    plan: &SequencePlan,
) -> Result<(PressureSequence, Vec<SceneInfo>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, &format!("sequence/{}/{}", plan.subject, plan.seq)));
    let (rows, cols) = (cfg.grid_rows, cfg.grid_cols);
    let seg = subject.segments(rows);
    let family = if plan.family == PostureFamily::RightSide { PostureFamily::LeftSide } else { plan.family };
    let fits = |w: f64, h: f64| w <= cols as f64 - 1.0 - 2.0 * MARGIN && h <= rows as f64 - 1.0 - 2.0 * MARGIN;
    let mut poses = Vec::new();
    for attempt in 0.. {
        if attempt == MAX_POSE_ATTEMPTS {
            return Err(Error::invalid(format!(
                "could not fit subject {} into a {rows}x{cols} grid",
                subject.subject_id
            )));
        }
        let (base, amp) = sample_base(family, &mut rng);
        let phase: [f64; 11] = std::array::from_fn(|_| rng.random_range(0.0..2.0 * PI));
        let freq = rng.random_range(0.5..1.5);
        poses = (0..plan.frames)
            .map(|i| {
                let t = i as f64 / plan.frames.max(2) as f64;
                pose_at_origin(&seg, &oscillate(&base, &amp, &phase, freq, t))
            })
            .collect();
        let all: Vec<(f64, f64)> = poses.iter().flatten().copied().collect();
        let (x0, y0, x1, y1) = bbox(&all);
        if fits(x1 - x0, y1 - y0) {
            break;
        }
    }
    let all: Vec<(f64, f64)> = poses.iter().flatten().copied().collect();
    let (x0, y0, x1, y1) = bbox(&all);
    let slack = (cols as f64 - 1.0 - 2.0 * MARGIN - (x1 - x0), rows as f64 - 1.0 - 2.0 * MARGIN - (y1 - y0));
    let drift = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let attenuation: Attenuation = if rng.random_bool(cfg.attenuation_probability) {
        let n = rng.random_range(1..=2);
        let mut edges = EXTREMITY_EDGES.to_vec();
        let mut chosen = Vec::new();
        for _ in 0..n {
            let e = edges.swap_remove(rng.random_range(0..edges.len()));
            let (lo, hi) = cfg.attenuation_range;
            let f = if hi > lo { rng.random_range(lo..hi) } else { lo };
            chosen.push((e, f));
        }
        chosen.sort_by_key(|c| c.0);
        chosen
    } else {
        Vec::new()
    };
    let offset_u: (f64, f64) = (rng.random_range(0.0..1.0), rng.random_range(0.0..1.0));
    let noise = Normal::new(0.0, cfg.noise_sigma.max(f64::MIN_POSITIVE)).expect("valid sigma");
    let seq_id = format!("seq{:02}_{}", plan.seq + 1, plan.family.name());
    let mut frames = Vec::with_capacity(plan.frames);
    let mut scenes = Vec::with_capacity(plan.frames);
    for (i, local) in poses.iter().enumerate() {
        let t = i as f64 / plan.frames.max(2) as f64;
        let wobble = (drift.0 * (2.0 * PI * t).sin(), drift.1 * (2.0 * PI * t).cos());
        let ox = MARGIN - x0 + (slack.0 * offset_u.0 + wobble.0).clamp(0.0, slack.0);
        let oy = MARGIN - y0 + (slack.1 * offset_u.1 + wobble.1).clamp(0.0, slack.1);
        let mut joints = [Keypoint::hidden(); NUM_JOINTS];
        for (j, (x, y)) in local.iter().enumerate() {
            joints[j] = Keypoint::visible(x + ox, y + oy);
        }
        let mut kps = KeypointSet::new(joints)?;
        if plan.family == PostureFamily::RightSide {
            kps = kps.mirrored(cols);
        }
        let mut values = render_pressure(&kps, subject, rows, cols, &attenuation);
        if cfg.noise_sigma > 0.0 {
            for v in values.iter_mut() {
                *v = (*v as f64 + noise.sample(&mut rng)).clamp(0.0, P_MAX as f64) as f32;
            }
        }
        let mut frame = PressureFrame::new(rows, cols, values, &subject.subject_id, &seq_id, i)?;
        frame.posture_label = Some(plan.family.name().to_string());
        frame.keypoints = Some(kps);
        frames.push(frame);
        scenes.push(SceneInfo {
            subject_id: subject.subject_id.clone(),
            sequence_id: seq_id.clone(),
            frame_index: i,
            posture: plan.family,
            attenuation: attenuation.clone(),
        });
    }
    Ok((PressureSequence::new(cfg.sensor_pitch_mm, frames)?, scenes))
}

/// Gaussian jitter on visible joints, clipped to a `(width, height)` grid.
pub fn perturb_keypoints(
    kps: &KeypointSet,
    sigma_px: f64,
    dims: (usize, usize),
    rng: &mut ChaCha8Rng,
) -> Result<KeypointSet> {
    if !(sigma_px >= 0.0) || !sigma_px.is_finite() {
        return Err(Error::invalid(format!("sigma_px must be finite and >= 0, got {sigma_px}")));
    }
    if sigma_px == 0.0 {
        return Ok(*kps);
    }
    let n = Normal::new(0.0, sigma_px).expect("valid sigma");
    let mut out = *kps;
    for k in out.joints.iter_mut().filter(|k| k.visible) {
        k.x = (k.x + n.sample(rng)).clamp(0.0, dims.0 as f64 - 1.0);
        k.y = (k.y + n.sample(rng)).clamp(0.0, dims.1 as f64 - 1.0);
    }
    Ok(out)
}

/// Jitters every annotation file with a seed derived per file.
pub fn perturb_annotations(
    files: &[AnnotationFile],
    sigma_px: f64,
    dims: (usize, usize),
    seed: u64,
) -> Result<Vec<AnnotationFile>> {
    files
        .iter()
        .map(|f| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(derive_seed(seed, &format!("perturb/{}/{}", f.subject_id, f.sequence_id)));
            let mut frames = Vec::with_capacity(f.annotations.len());
            for (idx, kps) in f.keypoint_sets()? {
                frames.push((idx, perturb_keypoints(&kps, sigma_px, dims, &mut rng)?));
            }
            Ok(AnnotationFile::new(&f.subject_id, &f.sequence_id, &frames))
        })
        .collect()
}

/// Nearest neighbour in raw pressure space over a labelled reference set.
#[derive(Debug, Clone)]
pub struct NearestNeighborBaseline {
    reference: Vec<(Vec<f32>, KeypointSet)>,
}

impl NearestNeighborBaseline {
    pub fn new(frames: &[&PressureFrame]) -> Result<Self> {
        let reference: Vec<_> = frames.iter().filter_map(|f| f.keypoints.map(|k| (f.values.clone(), k))).collect();
        if reference.is_empty() {
            return Err(Error::invalid("nearest-neighbour baseline needs labelled reference frames"));
        }
        Ok(NearestNeighborBaseline { reference })
    }

    /// Keypoints of the closest reference frame; every joint is scored
    /// `1 / (1 + rms distance)`.
    pub fn predict(&self, frame: &PressureFrame) -> Result<KeypointSet> {
        let mut best = (f64::INFINITY, 0usize);
        for (i, (vals, _)) in self.reference.iter().enumerate() {
            if vals.len() != frame.values.len() {
                return Err(Error::invalid("frame grid differs from the reference frames"));
            }
            let d: f64 = vals.iter().zip(&frame.values).map(|(a, b)| ((a - b) as f64).powi(2)).sum();
            if d < best.0 {
                best = (d, i);
            }
        }
        let score = 1.0 / (1.0 + (best.0 / frame.values.len() as f64).sqrt());
        let mut kps = self.reference[best.1].1;
        for k in kps.joints.iter_mut() {
            k.score = Some(score);
        }
        Ok(kps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SyntheticConfig {
        SyntheticConfig { n_subjects: 2, frames_per_subject: 8, ..Default::default() }
    }

    #[test]
    fn deterministic_and_in_bounds() {
        let a = generate_dataset(&small()).unwrap();
        let b = generate_dataset(&small()).unwrap();
        assert_eq!(a, b);
        let c = generate_dataset(&SyntheticConfig { seed: 1, ..small() }).unwrap();
        assert_ne!(a.dataset, c.dataset);
        for f in a.dataset.frames() {
            f.validate().unwrap();
            assert!(f.values.iter().all(|v| *v <= P_MAX));
            for k in f.keypoints.unwrap().joints {
                assert!(k.visible && k.x >= 0.0 && k.x <= 31.0 && k.y >= 0.0 && k.y <= 63.0);
            }
        }
        assert_eq!(a.dataset.frame_count(), 16);
        assert_eq!(a.scenes.len(), 16);
    }

    #[test]
    fn right_side_mirrors_left_side() {
        let d = generate_dataset(&SyntheticConfig { noise_sigma: 0.0, ..small() }).unwrap();
        let side = |name: &str| {
            d.dataset.sequences.iter().find(|s| s.posture_label.as_deref() == Some(name)).unwrap().frames[0]
                .keypoints
                .unwrap()
        };
        let (l, r) = (side("left_side"), side("right_side"));
        assert!(l[JointName::LeftWrist].x > l[JointName::Neck].x);
        assert!(r[JointName::RightWrist].x < r[JointName::Neck].x);
    }

    #[test]
    fn zero_sigma_is_identity() {
        let d = generate_dataset(&small()).unwrap();
        let k = d.dataset.frames().next().unwrap().keypoints.unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(perturb_keypoints(&k, 0.0, (32, 64), &mut rng).unwrap(), k);
        assert!(perturb_keypoints(&k, -1.0, (32, 64), &mut rng).is_err());
    }
}
