//! Keypoint evaluation: torso-normalized AP curves, MPJPE, PCK, report
//! tables and the Mann–Whitney U test across repeated runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::skeleton::{JointName, KeypointSet};

/// Left shoulder to right hip distance, when both are visible.
pub fn torso_length(gt: &KeypointSet) -> Option<f64> {
    let (ls, rh) = (gt[JointName::LeftShoulder], gt[JointName::RightHip]);
    (ls.visible && rh.visible).then(|| ls.distance(&rh))
}

/// Per-frame torso lengths with the dataset-median fallback.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsoLengths {
    pub lengths: Vec<f64>,
    pub fallback: Vec<bool>,
    pub median: f64,
}

impl TorsoLengths {
    pub fn compute(gts: &[KeypointSet]) -> Result<Self> {
        let direct: Vec<Option<f64>> = gts.iter().map(torso_length).collect();
        let mut known: Vec<f64> = direct.iter().flatten().copied().collect();
        if known.is_empty() {
            return Err(Error::Evaluation(
                "no frame has both left shoulder and right hip visible; torso length undefined".into(),
            ));
        }
        known.sort_by(f64::total_cmp);
        let n = known.len();
        let median = if n % 2 == 1 { known[n / 2] } else { 0.5 * (known[n / 2 - 1] + known[n / 2]) };
        Ok(TorsoLengths {
            lengths: direct.iter().map(|d| d.unwrap_or(median)).collect(),
            fallback: direct.iter().map(Option::is_none).collect(),
            median,
        })
    }
}

/// One prediction matched against a visible ground-truth joint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchRecord {
    pub frame_id: String,
    pub joint: JointName,
    pub distance_px: f64,
    pub distance_mm: f64,
    pub score: f64,
    pub gt_visible: bool,
    /// Torso length of the record's frame, grid pixels.
    pub torso_px: f64,
}

/// Recall denominator of the precision–recall curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ApBasis {
    /// Number of visible ground-truth instances.
    #[default]
    GroundTruth,
    /// Number of true positives in the ranked list (the curve always ends
    /// at recall 1).
    Detections,
}

/// Interpolated and raw precision–recall areas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApValue {
    pub interpolated: f64,
    pub raw: f64,
}

fn ranked(records: &[MatchRecord]) -> Vec<&MatchRecord> {
    let mut r: Vec<&MatchRecord> = records.iter().filter(|r| r.gt_visible).collect();
    r.sort_by(|a, b| b.score.total_cmp(&a.score).then_with(|| a.frame_id.cmp(&b.frame_id)));
    r
}

/// AP of one joint's records at threshold `t` (fraction of torso length).
/// Returns `None` when no record has a visible ground truth.
pub fn ap_at_threshold(records: &[MatchRecord], t: f64, basis: ApBasis) -> Result<Option<ApValue>> {
    if !(t > 0.0) {
        return Err(Error::invalid(format!("AP threshold must be positive, got {t}")));
    }
    let list = ranked(records);
    if list.is_empty() {
        return Ok(None);
    }
    let hits: Vec<bool> = list.iter().map(|r| r.distance_px <= t * r.torso_px).collect();
    let mut precision = Vec::with_capacity(hits.len());
    let mut tp = 0usize;
    for (k, &h) in hits.iter().enumerate() {
        tp += usize::from(h);
        precision.push(tp as f64 / (k + 1) as f64);
    }
    let denom = match basis {
        ApBasis::GroundTruth => list.len(),
        ApBasis::Detections => tp,
    };
    if tp == 0 {
        return Ok(Some(ApValue { interpolated: 0.0, raw: 0.0 }));
    }
    let mut interp = precision.clone();
    for k in (0..interp.len().saturating_sub(1)).rev() {
        interp[k] = interp[k].max(interp[k + 1]);
    }
    let (mut a, mut r) = (0.0, 0.0);
    for k in 0..hits.len() {
        if hits[k] {
            a += interp[k];
            r += precision[k];
        }
    }
    Ok(Some(ApValue { interpolated: a / denom as f64, raw: r / denom as f64 }))
}

/// The default threshold grid `0.01, 0.02, …, 0.50`.
pub fn default_thresholds() -> Vec<f64> {
    (1..=50).map(|i| i as f64 / 100.0).collect()
}

/// A predicted and a ground-truth pose for one frame.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalSample {
    pub frame_id: String,
    pub pred: KeypointSet,
    pub gt: KeypointSet,
}

/// Match records for every visible ground-truth joint.
pub fn match_records(samples: &[EvalSample], sensor_pitch_mm: f64) -> Result<(Vec<MatchRecord>, TorsoLengths)> {
    if !(sensor_pitch_mm > 0.0) {
        return Err(Error::invalid(format!("sensor pitch must be positive, got {sensor_pitch_mm}")));
    }
    let gts: Vec<KeypointSet> = samples.iter().map(|s| s.gt).collect();
    let torso = TorsoLengths::compute(&gts)?;
    let mut out = Vec::new();
    for (s, &tl) in samples.iter().zip(&torso.lengths) {
        for j in JointName::ALL {
            let (p, g) = (s.pred[j], s.gt[j]);
            if !g.visible {
                continue;
            }
            if !p.visible || !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::Evaluation(format!("{}: no usable prediction for {}", s.frame_id, j.name())));
            }
            let d = p.distance(&g);
            out.push(MatchRecord {
                frame_id: s.frame_id.clone(),
                joint: j,
                distance_px: d,
                distance_mm: d * sensor_pitch_mm,
                score: p.score.unwrap_or(0.0),
                gt_visible: true,
                torso_px: tl,
            });
        }
    }
    Ok((out, torso))
}

/// Per-joint AP over a threshold grid.
pub fn ap_curve(records: &[MatchRecord], thresholds: &[f64], basis: ApBasis) -> Result<Vec<Vec<Option<ApValue>>>> {
    if thresholds.is_empty() || thresholds.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid("threshold grid must be non-empty and strictly increasing"));
    }
    JointName::ALL
        .iter()
        .map(|j| {
            let recs: Vec<MatchRecord> = records.iter().filter(|r| r.joint == *j).cloned().collect();
            thresholds.iter().map(|&t| ap_at_threshold(&recs, t, basis)).collect()
        })
        .collect()
}

/// Mean Euclidean error over visible joints, in mm.
pub fn mpjpe(preds: &[KeypointSet], gts: &[KeypointSet], sensor_pitch_mm: f64) -> Result<f64> {
    if !(sensor_pitch_mm > 0.0) {
        return Err(Error::invalid(format!("sensor pitch must be positive, got {sensor_pitch_mm}")));
    }
    if preds.len() != gts.len() {
        return Err(Error::invalid(format!("{} predictions for {} ground-truth frames", preds.len(), gts.len())));
    }
    let (mut sum, mut n) = (0.0, 0usize);
    for (p, g) in preds.iter().zip(gts) {
        for j in JointName::ALL {
            if g[j].visible {
                sum += p[j].distance(&g[j]);
                n += 1;
            }
        }
    }
    if n == 0 {
        return Err(Error::Evaluation("no visible ground-truth joints".into()));
    }
    Ok(sum / n as f64 * sensor_pitch_mm)
}

/// Fraction of visible joints within `t` torso lengths.
pub fn pck(preds: &[KeypointSet], gts: &[KeypointSet], t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::invalid(format!("PCK threshold must be positive, got {t}")));
    }
    if preds.len() != gts.len() {
        return Err(Error::invalid(format!("{} predictions for {} ground-truth frames", preds.len(), gts.len())));
    }
    let torso = TorsoLengths::compute(gts)?;
    let (mut hit, mut n) = (0usize, 0usize);
    for ((p, g), tl) in preds.iter().zip(gts).zip(&torso.lengths) {
        for j in JointName::ALL {
            if g[j].visible {
                n += 1;
                hit += usize::from(p[j].distance(&g[j]) <= t * tl);
            }
        }
    }
    if n == 0 {
        return Err(Error::Evaluation("no visible ground-truth joints".into()));
    }
    Ok(hit as f64 / n as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EvalConfig {
    pub thresholds: Vec<f64>,
    pub pck_thresholds: Vec<f64>,
    pub ap_basis: ApBasis,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            thresholds: default_thresholds(),
            pck_thresholds: vec![0.05, 0.1, 0.2, 0.25, 0.5],
            ap_basis: ApBasis::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointReport {
    pub joint: JointName,
    pub instances: usize,
    /// AP per threshold of the grid; `null` without visible instances.
    pub ap: Vec<Option<f64>>,
    pub ap_raw: Vec<Option<f64>>,
    pub ap5: Option<f64>,
    pub ap10: Option<f64>,
    pub mpjpe_mm: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PckValue {
    pub threshold: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub label: String,
    pub seed: u64,
    pub config_fingerprint: String,
    pub sample_count: usize,
    pub sensor_pitch_mm: f64,
    pub ap_basis: ApBasis,
    pub thresholds: Vec<f64>,
    pub joints: Vec<JointReport>,
    /// Mean over joints with visible instances.
    pub ap5: Option<f64>,
    pub ap10: Option<f64>,
    pub mpjpe_mm: f64,
    pub pck: Vec<PckValue>,
    pub median_torso_px: f64,
    /// Dataset-mean 5% threshold, grid pixels and mm.
    pub mean_threshold5_px: f64,
    pub mean_threshold5_mm: f64,
    /// Frames whose torso length fell back to the dataset median.
    pub torso_fallback_frames: Vec<String>,
}

/// Metadata stamped into a report.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReportMeta {
    pub label: String,
    pub seed: u64,
    pub config_fingerprint: String,
}

fn grid_value(thresholds: &[f64], values: &[Option<f64>], t: f64) -> Option<f64> {
    thresholds.iter().position(|x| (x - t).abs() < 1e-12).and_then(|i| values[i])
}

fn mean_of(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let v: Vec<f64> = values.flatten().collect();
    (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
}

pub fn evaluate(
    samples: &[EvalSample],
    sensor_pitch_mm: f64,
    cfg: &EvalConfig,
    meta: &ReportMeta,
) -> Result<EvaluationReport> {
    if samples.is_empty() {
        return Err(Error::Evaluation("no frames to evaluate".into()));
    }
    let (records, torso) = match_records(samples, sensor_pitch_mm)?;
    let fallbacks = torso.fallback.iter().filter(|f| **f).count();
    if fallbacks > 0 {
        log::warn!("{fallbacks} frames lack a visible torso; using the median torso length {:.2}", torso.median);
    }
    let curves = ap_curve(&records, &cfg.thresholds, cfg.ap_basis)?;
    let preds: Vec<KeypointSet> = samples.iter().map(|s| s.pred).collect();
    let gts: Vec<KeypointSet> = samples.iter().map(|s| s.gt).collect();
    let joints: Vec<JointReport> = JointName::ALL
        .iter()
        .zip(curves)
        .map(|(j, curve)| {
            let recs: Vec<&MatchRecord> = records.iter().filter(|r| r.joint == *j).collect();
            let ap: Vec<Option<f64>> = curve.iter().map(|v| v.map(|a| a.interpolated)).collect();
            let ap_raw: Vec<Option<f64>> = curve.iter().map(|v| v.map(|a| a.raw)).collect();
            JointReport {
                joint: *j,
                instances: recs.len(),
                ap5: grid_value(&cfg.thresholds, &ap, 0.05),
                ap10: grid_value(&cfg.thresholds, &ap, 0.10),
                ap,
                ap_raw,
                mpjpe_mm: (!recs.is_empty())
                    .then(|| recs.iter().map(|r| r.distance_mm).sum::<f64>() / recs.len() as f64),
            }
        })
        .collect();
    let pck_values = cfg
        .pck_thresholds
        .iter()
        .map(|&t| Ok(PckValue { threshold: t, value: pck(&preds, &gts, t)? }))
        .collect::<Result<Vec<_>>>()?;
    let mean_torso = torso.lengths.iter().sum::<f64>() / torso.lengths.len() as f64;
    Ok(EvaluationReport {
        label: meta.label.clone(),
        seed: meta.seed,
        config_fingerprint: meta.config_fingerprint.clone(),
        sample_count: samples.len(),
        sensor_pitch_mm,
        ap_basis: cfg.ap_basis,
        thresholds: cfg.thresholds.clone(),
        ap5: mean_of(joints.iter().map(|j| j.ap5)),
        ap10: mean_of(joints.iter().map(|j| j.ap10)),
        joints,
        mpjpe_mm: mpjpe(&preds, &gts, sensor_pitch_mm)?,
        pck: pck_values,
        median_torso_px: torso.median,
        mean_threshold5_px: 0.05 * mean_torso,
        mean_threshold5_mm: 0.05 * mean_torso * sensor_pitch_mm,
        torso_fallback_frames: samples
            .iter()
            .zip(&torso.fallback)
            .filter(|(_, f)| **f)
            .map(|(s, _)| s.frame_id.clone())
            .collect(),
    })
}

impl EvaluationReport {
    pub fn joint(&self, j: JointName) -> &JointReport {
        &self.joints[j.index()]
    }

    /// `threshold,head,neck,…` with one row per grid threshold.
    pub fn ap_curve_csv(&self) -> String {
        let mut s = String::from("threshold");
        for j in &self.joints {
            let _ = write!(s, ",{}", j.joint.name());
        }
        s.push('\n');
        for (i, t) in self.thresholds.iter().enumerate() {
            let _ = write!(s, "{t}");
            for j in &self.joints {
                match j.ap[i] {
                    Some(v) => {
                        let _ = write!(s, ",{v}");
                    }
                    None => s.push(','),
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let files = [
            ("report.json", self.to_json()),
            ("ap_curve.csv", self.ap_curve_csv()),
            ("tables.txt", build_report_tables(std::slice::from_ref(self)).text()),
        ];
        for (name, body) in files {
            let p = dir.join(name);
            std::fs::write(&p, body).map_err(|e| Error::io(&p, e))?;
        }
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
    }
}

/// Body parts of the per-joint tables, in column order.
pub const TABLE_JOINTS: [JointName; 13] = [
    JointName::Head,
    JointName::LeftShoulder,
    JointName::RightShoulder,
    JointName::LeftElbow,
    JointName::RightElbow,
    JointName::LeftWrist,
    JointName::RightWrist,
    JointName::LeftHip,
    JointName::RightHip,
    JointName::LeftKnee,
    JointName::RightKnee,
    JointName::LeftAnkle,
    JointName::RightAnkle,
];

/// Per-joint AP5 and ablation tables in CSV and plain text.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportTables {
    pub per_joint_csv: String,
    pub ablation_csv: String,
    pub per_joint_text: String,
    pub ablation_text: String,
}

impl ReportTables {
    pub fn text(&self) -> String {
        format!("AP5 per body part (%)\n{}\nAblation\n{}", self.per_joint_text, self.ablation_text)
    }
}

fn pct(v: Option<f64>) -> String {
    v.map_or("-".into(), |x| format!("{:.1}", 100.0 * x))
}

fn csv_opt(v: Option<f64>) -> String {
    v.map_or(String::new(), |x| format!("{x}"))
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// One row per report (labelled by `report.label`).
pub fn build_report_tables(reports: &[EvaluationReport]) -> ReportTables {
    let header: Vec<&str> = TABLE_JOINTS.iter().map(|j| j.abbrev()).collect();
    let width = reports.iter().map(|r| r.label.len()).max().unwrap_or(0).max(6);
    let mut per_joint_text = format!("{:<width$}", "method");
    for h in &header {
        let _ = write!(per_joint_text, " {h:>5}");
    }
    per_joint_text.push('\n');
    let mut ablation_text = format!("{:<width$} {:>6} {:>10}\n", "method", "AP5", "MPJPE(mm)");
    let (mut per_joint_rows, mut ablation_rows) = (Vec::new(), Vec::new());
    for r in reports {
        let vals: Vec<Option<f64>> = TABLE_JOINTS.iter().map(|j| r.joint(*j).ap5).collect();
        per_joint_rows.push(std::iter::once(r.label.clone()).chain(vals.iter().map(|v| csv_opt(*v))).collect());
        let _ = write!(per_joint_text, "{:<width$}", r.label);
        for v in &vals {
            let _ = write!(per_joint_text, " {:>5}", pct(*v));
        }
        per_joint_text.push('\n');
        ablation_rows.push(vec![r.label.clone(), csv_opt(r.ap5), r.mpjpe_mm.to_string()]);
        let _ = writeln!(ablation_text, "{:<width$} {:>6} {:>10.1}", r.label, pct(r.ap5), r.mpjpe_mm);
    }
    let per_joint_csv = to_csv(&[&["method"][..], &header].concat(), &per_joint_rows);
    let ablation_csv = to_csv(&["method", "ap5", "mpjpe_mm"], &ablation_rows);
    ReportTables { per_joint_csv, ablation_csv, per_joint_text, ablation_text }
}

/// Result of a two-sided Mann–Whitney U test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MannWhitney {
    /// U statistic of the first sample.
    pub u: f64,
    pub p_value: f64,
    /// Exact null distribution (no ties) or normal approximation.
    pub exact: bool,
}

impl MannWhitney {
    pub fn significant(&self) -> bool {
        self.p_value < 0.05
    }
}

/// Largest per-side size for which the exact distribution is used.
const EXACT_LIMIT: usize = 30;

/// Number of arrangements of `n` and `m` items with each U value.
fn u_counts(n: usize, m: usize) -> Vec<f64> {
    // f[i][j][u]: arrangements of i first-sample and j second-sample items.
    let mut prev: Vec<Vec<f64>> = (0..=m).map(|_| vec![1.0]).collect();
    for i in 1..=n {
        let mut cur: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
        cur.push(vec![1.0]);
        for j in 1..=m {
            let mut v = vec![0.0; i * j + 1];
            // Largest item belongs to the first sample: it beats all j.
            for (u, c) in prev[j].iter().enumerate() {
                v[u + j] += c;
            }
            for (u, c) in cur[j - 1].iter().enumerate() {
                v[u] += c;
            }
            cur.push(v);
        }
        prev = cur;
    }
    prev.pop().expect("m + 1 entries")
}

fn normal_sf(z: f64) -> f64 {
    0.5 * erfc(z / std::f64::consts::SQRT_2)
}

/// Complementary error function (Numerical Recipes `erfcc`, |ε| < 1.2e-7).
fn erfc(x: f64) -> f64 {
    let z = x.abs();
    let t = 1.0 / (1.0 + 0.5 * z);
    let r = t
        * (-z * z - 1.26551223
            + t * (1.00002368
                + t * (0.37409196
                    + t * (0.09678418
                        + t * (-0.18628806
                            + t * (0.27886807
                                + t * (-1.13520398 + t * (1.48851587 + t * (-0.82215223 + t * 0.17087277)))))))))
            .exp();
    if x >= 0.0 {
        r
    } else {
        2.0 - r
    }
}

/// Two-sided Mann–Whitney U test of `a` against `b`.
pub fn mann_whitney(a: &[f64], b: &[f64]) -> Result<MannWhitney> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::invalid(format!("need at least 2 values per side, got {} and {}", a.len(), b.len())));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::invalid("Mann-Whitney inputs must be finite"));
    }
    let (n, m) = (a.len(), b.len());
    let mut all: Vec<(f64, bool)> = a.iter().map(|&v| (v, true)).chain(b.iter().map(|&v| (v, false))).collect();
    all.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut ranks = vec![0.0; all.len()];
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < all.len() {
        let mut j = i;
        while j + 1 < all.len() && all[j + 1].0 == all[i].0 {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        ranks[i..=j].iter_mut().for_each(|x| *x = r);
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let r_a: f64 = all.iter().zip(&ranks).filter(|(v, _)| v.1).map(|(_, r)| r).sum();
    let u = r_a - (n * (n + 1)) as f64 / 2.0;
    let ties = tie_term > 0.0;
    if !ties && n <= EXACT_LIMIT && m <= EXACT_LIMIT {
        let counts = u_counts(n, m);
        let total: f64 = counts.iter().sum();
        let k = u.round() as usize;
        let lower: f64 = counts[..=k].iter().sum::<f64>() / total;
        let upper: f64 = counts[k..].iter().sum::<f64>() / total;
        return Ok(MannWhitney { u, p_value: (2.0 * lower.min(upper)).min(1.0), exact: true });
    }
    let (nf, mf) = (n as f64, m as f64);
    let nt = nf + mf;
    let mean = nf * mf / 2.0;
    let var = nf * mf / 12.0 * ((nt + 1.0) - tie_term / (nt * (nt - 1.0)));
    if var <= 0.0 {
        return Ok(MannWhitney { u, p_value: 1.0, exact: false });
    }
    let dev = ((u - mean).abs() - 0.5).max(0.0);
    let p = (2.0 * normal_sf(dev / var.sqrt())).min(1.0);
    Ok(MannWhitney { u, p_value: p, exact: false })
}

/// Mann–Whitney test on the AP5 values of two report lists.
pub fn significance_test(a: &[EvaluationReport], b: &[EvaluationReport]) -> Result<MannWhitney> {
    let ap5 = |rs: &[EvaluationReport]| -> Result<Vec<f64>> {
        rs.iter().map(|r| r.ap5.ok_or_else(|| Error::Evaluation(format!("report `{}` has no AP5", r.label)))).collect()
    };
    mann_whitney(&ap5(a)?, &ap5(b)?)
}

/// Summary across repeated runs of one configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub label: String,
    pub seeds: Vec<u64>,
    pub ap5: Vec<f64>,
    pub mean_ap5: f64,
    pub mean_mpjpe_mm: f64,
}

pub fn summarize_runs(reports: &[EvaluationReport]) -> Result<RunSummary> {
    let first = reports.first().ok_or_else(|| Error::invalid("no reports to summarize"))?;
    let ap5: Vec<f64> = reports.iter().map(|r| r.ap5.unwrap_or(0.0)).collect();
    Ok(RunSummary {
        label: first.label.clone(),
        seeds: reports.iter().map(|r| r.seed).collect(),
        mean_ap5: ap5.iter().sum::<f64>() / ap5.len() as f64,
        mean_mpjpe_mm: reports.iter().map(|r| r.mpjpe_mm).sum::<f64>() / reports.len() as f64,
        ap5,
    })
}

/// Per-joint counts of visible instances, used in diagnostics.
pub fn visible_counts(gts: &[KeypointSet]) -> BTreeMap<JointName, usize> {
    let mut m = BTreeMap::new();
    for g in gts {
        for j in JointName::ALL {
            if g[j].visible {
                *m.entry(j).or_insert(0) += 1;
            }
        }
    }
    m
}
