//! Pressure frames and sequences, plus the cleaning chain applied before
//! colorization: spatio-temporal median filter, transition-frame dropping,
//! mean-pressure outlier rejection and leave-subjects-out splitting.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::skeleton::KeypointSet;

/// One sensor reading of the mat, row-major, in mmHg.
#[derive(Debug, Clone, PartialEq)]
pub struct PressureFrame {
    pub rows: usize,
    pub cols: usize,
    pub values: Vec<f32>,
    pub subject_id: String,
    pub sequence_id: String,
    pub frame_index: usize,
    pub posture_label: Option<String>,
    /// Ground-truth keypoints attached by the loader or generator.
    pub keypoints: Option<KeypointSet>,
}

impl PressureFrame {
    pub fn new(
        rows: usize,
        cols: usize,
        values: Vec<f32>,
        subject_id: impl Into<String>,
        sequence_id: impl Into<String>,
        frame_index: usize,
    ) -> Result<Self> {
        let frame = PressureFrame {
            rows,
            cols,
            values,
            subject_id: subject_id.into(),
            sequence_id: sequence_id.into(),
            frame_index,
            posture_label: None,
            keypoints: None,
        };
        frame.validate()?;
        Ok(frame)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::invalid(format!("{}: empty grid {}x{}", self.label(), self.rows, self.cols)));
        }
        if self.values.len() != self.rows * self.cols {
            return Err(Error::invalid(format!(
                "{}: {} values for a {}x{} grid",
                self.label(),
                self.values.len(),
                self.rows,
                self.cols
            )));
        }
        if let Some(pos) = self.values.iter().position(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::invalid(format!(
                "{}: cell {} holds {} (values must be finite and non-negative)",
                self.label(),
                pos,
                self.values[pos]
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> f32 {
        self.values[row * self.cols + col]
    }

    pub fn mean_pressure(&self) -> f64 {
        self.values.iter().map(|&v| v as f64).sum::<f64>() / self.values.len() as f64
    }

    /// `subject/sequence#index`, used in diagnostics.
    pub fn label(&self) -> String {
        format!("{}/{}#{}", self.subject_id, self.sequence_id, self.frame_index)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PressureSequence {
    pub subject_id: String,
    pub sequence_id: String,
    pub posture_label: Option<String>,
    pub sensor_pitch_mm: f64,
    pub rows: usize,
    pub cols: usize,
    pub frames: Vec<PressureFrame>,
    /// Set when preprocessing removed every frame.
    pub excluded: bool,
}

impl PressureSequence {
    /// Builds a sequence and checks identity, dims and index ordering.
    pub fn new(sensor_pitch_mm: f64, frames: Vec<PressureFrame>) -> Result<Self> {
        let first = frames.first().ok_or_else(|| Error::invalid("a sequence needs at least one frame"))?;
        let seq = PressureSequence {
            subject_id: first.subject_id.clone(),
            sequence_id: first.sequence_id.clone(),
            posture_label: first.posture_label.clone(),
            sensor_pitch_mm,
            rows: first.rows,
            cols: first.cols,
            frames,
            excluded: false,
        };
        seq.validate()?;
        Ok(seq)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sensor_pitch_mm > 0.0) || !self.sensor_pitch_mm.is_finite() {
            return Err(Error::invalid(format!(
                "sequence {}/{}: sensor pitch must be positive, got {}",
                self.subject_id, self.sequence_id, self.sensor_pitch_mm
            )));
        }
        let mut prev: Option<usize> = None;
        for frame in &self.frames {
            frame.validate()?;
            if frame.rows != self.rows || frame.cols != self.cols {
                return Err(Error::invalid(format!(
                    "{}: grid {}x{} differs from sequence grid {}x{}",
                    frame.label(),
                    frame.rows,
                    frame.cols,
                    self.rows,
                    self.cols
                )));
            }
            if frame.subject_id != self.subject_id || frame.sequence_id != self.sequence_id {
                return Err(Error::invalid(format!(
                    "{}: frame does not belong to sequence {}/{}",
                    frame.label(),
                    self.subject_id,
                    self.sequence_id
                )));
            }
            if let Some(p) = prev {
                if frame.frame_index <= p {
                    return Err(Error::invalid(format!(
                        "{}: frame indices must be strictly increasing (previous {p})",
                        frame.label()
                    )));
                }
            }
            prev = Some(frame.frame_index);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    fn with_frames(&self, frames: Vec<PressureFrame>) -> Self {
        PressureSequence { excluded: frames.is_empty(), frames, ..self.clone_header() }
    }

    fn clone_header(&self) -> Self {
        PressureSequence {
            subject_id: self.subject_id.clone(),
            sequence_id: self.sequence_id.clone(),
            posture_label: self.posture_label.clone(),
            sensor_pitch_mm: self.sensor_pitch_mm,
            rows: self.rows,
            cols: self.cols,
            frames: Vec::new(),
            excluded: self.excluded,
        }
    }
}

/// Median window extent along (time, rows, cols).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedianWindow {
    pub t: usize,
    pub h: usize,
    pub w: usize,
}

impl Default for MedianWindow {
    fn default() -> Self {
        MedianWindow { t: 3, h: 3, w: 3 }
    }
}

/// Median over a `t×h×w` window with replicate padding on all three axes.
pub fn median_filter_spatiotemporal(seq: &PressureSequence, size: MedianWindow) -> Result<PressureSequence> {
    for (axis, n) in [("t", size.t), ("h", size.h), ("w", size.w)] {
        if n == 0 || n % 2 == 0 {
            return Err(Error::invalid(format!("median window {axis}={n} must be odd and >= 1")));
        }
    }
    if seq.frames.is_empty() {
        return Err(Error::invalid(format!(
            "cannot median-filter empty sequence {}/{}",
            seq.subject_id, seq.sequence_id
        )));
    }
    let (nt, rows, cols) = (seq.frames.len(), seq.rows, seq.cols);
    let (rt, rh, rw) = ((size.t / 2) as isize, (size.h / 2) as isize, (size.w / 2) as isize);
    let clamp = |v: isize, n: usize| v.clamp(0, n as isize - 1) as usize;
    let mut window = Vec::with_capacity(size.t * size.h * size.w);
    let mut frames = Vec::with_capacity(nt);
    for t in 0..nt {
        let mut out = vec![0f32; rows * cols];
        for r in 0..rows {
            for c in 0..cols {
                window.clear();
                for dt in -rt..=rt {
                    let src = &seq.frames[clamp(t as isize + dt, nt)].values;
                    for dr in -rh..=rh {
                        let rr = clamp(r as isize + dr, rows);
                        for dc in -rw..=rw {
                            window.push(src[rr * cols + clamp(c as isize + dc, cols)]);
                        }
                    }
                }
                let mid = window.len() / 2;
                let (_, m, _) = window.select_nth_unstable_by(mid, f32::total_cmp);
                out[r * cols + c] = *m;
            }
        }
        frames.push(PressureFrame { values: out, ..seq.frames[t].clone() });
    }
    Ok(seq.with_frames(frames))
}

/// Drops the first `n` frames; a sequence with `len <= n` comes back empty
/// and flagged as excluded.
pub fn drop_transition_frames(seq: &PressureSequence, n: usize) -> PressureSequence {
    let frames = seq.frames.iter().skip(n).cloned().collect();
    seq.with_frames(frames)
}

/// A frame rejected by [`remove_outlier_frames`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rejection {
    pub subject_id: String,
    pub sequence_id: String,
    pub frame_index: usize,
    pub mean_pressure: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Rejects frames whose mean pressure leaves `[mu - k*sigma, mu + k*sigma]`
/// of the per-frame means (population sigma). `sigma == 0` keeps all.
pub fn remove_outlier_frames(frames: Vec<PressureFrame>, k: f64) -> Result<(Vec<PressureFrame>, Vec<Rejection>)> {
    if frames.is_empty() {
        return Err(Error::invalid("outlier removal needs at least one frame"));
    }
    if k.is_nan() || k < 0.0 {
        return Err(Error::invalid(format!("outlier band k must be >= 0, got {k}")));
    }
    let means: Vec<f64> = frames.iter().map(PressureFrame::mean_pressure).collect();
    let n = means.len() as f64;
    let mu = means.iter().sum::<f64>() / n;
    let sigma = (means.iter().map(|m| (m - mu) * (m - mu)).sum::<f64>() / n).sqrt();
    if sigma == 0.0 || k.is_infinite() {
        return Ok((frames, Vec::new()));
    }
    let (lower, upper) = (mu - k * sigma, mu + k * sigma);
    let mut kept = Vec::with_capacity(frames.len());
    let mut rejected = Vec::new();
    for (frame, mean) in frames.into_iter().zip(means) {
        if mean < lower || mean > upper {
            rejected.push(Rejection {
                subject_id: frame.subject_id.clone(),
                sequence_id: frame.sequence_id.clone(),
                frame_index: frame.frame_index,
                mean_pressure: mean,
                lower,
                upper,
            });
        } else {
            kept.push(frame);
        }
    }
    Ok((kept, rejected))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PreprocessConfig {
    pub median_window: MedianWindow,
    pub drop_first: usize,
    pub outlier_k: f64,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig { median_window: MedianWindow::default(), drop_first: 3, outlier_k: 3.0 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PreprocessLog {
    pub frames_in: usize,
    pub frames_out: usize,
    pub dropped_transition: usize,
    pub excluded_sequences: Vec<String>,
    pub rejections: Vec<Rejection>,
}

/// Runs median filter, transition dropping and dataset-wide outlier
/// rejection, in that order. Sequences left empty are removed and listed in
/// the log.
pub fn preprocess_sequences(
    seqs: &[PressureSequence],
    cfg: &PreprocessConfig,
) -> Result<(Vec<PressureSequence>, PreprocessLog)> {
    use rayon::prelude::*;

    let mut log = PreprocessLog { frames_in: seqs.iter().map(|s| s.len()).sum(), ..Default::default() };
    let filtered: Vec<PressureSequence> = seqs
        .par_iter()
        .filter(|s| !s.is_empty())
        .map(|s| median_filter_spatiotemporal(s, cfg.median_window).map(|f| drop_transition_frames(&f, cfg.drop_first)))
        .collect::<Result<_>>()?;
    let mut survivors = Vec::new();
    for s in filtered {
        log.dropped_transition += seqs_len(seqs, &s).saturating_sub(s.len());
        if s.excluded {
            log.excluded_sequences.push(format!("{}/{}", s.subject_id, s.sequence_id));
        } else {
            survivors.push(s);
        }
    }
    if survivors.is_empty() {
        return Err(Error::invalid("preprocessing removed every frame"));
    }
    let all: Vec<PressureFrame> = survivors.iter().flat_map(|s| s.frames.iter().cloned()).collect();
    let (kept, rejections) = remove_outlier_frames(all, cfg.outlier_k)?;
    log.rejections = rejections;
    let mut out = Vec::with_capacity(survivors.len());
    let mut kept = kept.into_iter().peekable();
    for s in &survivors {
        let mut frames = Vec::new();
        while let Some(f) = kept.peek() {
            if f.subject_id == s.subject_id && f.sequence_id == s.sequence_id {
                frames.push(kept.next().expect("peeked"));
            } else {
                break;
            }
        }
        let seq = s.with_frames(frames);
        if seq.excluded {
            log.excluded_sequences.push(format!("{}/{}", seq.subject_id, seq.sequence_id));
        } else {
            out.push(seq);
        }
    }
    log.frames_out = out.iter().map(|s| s.len()).sum();
    Ok((out, log))
}

fn seqs_len(seqs: &[PressureSequence], s: &PressureSequence) -> usize {
    seqs.iter().find(|o| o.subject_id == s.subject_id && o.sequence_id == s.sequence_id).map_or(0, |o| o.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetSplit {
    pub train_subjects: BTreeSet<String>,
    pub test_subjects: BTreeSet<String>,
}

/// The last `n_test` subjects (in the given order) form the test set.
pub fn split_leave_subjects_out(subjects: &[String], n_test: usize) -> Result<DatasetSplit> {
    let unique: BTreeSet<&String> = subjects.iter().collect();
    if unique.len() != subjects.len() {
        return Err(Error::invalid("subject list contains duplicates"));
    }
    if n_test >= subjects.len() {
        return Err(Error::invalid(format!("n_test={n_test} leaves no training subject among {}", subjects.len())));
    }
    let cut = subjects.len() - n_test;
    Ok(DatasetSplit {
        train_subjects: subjects[..cut].iter().cloned().collect(),
        test_subjects: subjects[cut..].iter().cloned().collect(),
    })
}

/// Subject ids in order of first appearance.
pub fn subjects_in_order(seqs: &[PressureSequence]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    seqs.iter().filter(|s| seen.insert(s.subject_id.clone())).map(|s| s.subject_id.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq_from(volume: &[Vec<f32>], rows: usize, cols: usize) -> PressureSequence {
        let frames = volume
            .iter()
            .enumerate()
            .map(|(i, v)| PressureFrame::new(rows, cols, v.clone(), "s1", "q1", i).unwrap())
            .collect();
        PressureSequence::new(25.4, frames).unwrap()
    }

    #[test]
    fn constant_volume_is_unchanged() {
        let s = seq_from(&vec![vec![7.0; 12]; 4], 3, 4);
        let f = median_filter_spatiotemporal(&s, MedianWindow::default()).unwrap();
        assert_eq!(f, s);
    }

    #[test]
    fn spike_removed_by_spatial_window() {
        let mut v = vec![0.0; 25];
        v[12] = 100.0;
        let s = seq_from(&[v], 5, 5);
        let f = median_filter_spatiotemporal(&s, MedianWindow { t: 1, h: 3, w: 3 }).unwrap();
        assert!(f.frames[0].values.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn even_window_and_empty_sequence_rejected() {
        let s = seq_from(&[vec![1.0; 4]], 2, 2);
        assert!(matches!(
            median_filter_spatiotemporal(&s, MedianWindow { t: 2, h: 3, w: 3 }),
            Err(Error::InvalidArgument(_))
        ));
        let empty = drop_transition_frames(&s, 5);
        assert!(empty.excluded && empty.is_empty());
        assert!(median_filter_spatiotemporal(&empty, MedianWindow::default()).is_err());
    }

    #[test]
    fn drop_keeps_original_indices() {
        let s = seq_from(&vec![vec![1.0; 4]; 10], 2, 2);
        let d = drop_transition_frames(&s, 3);
        let idx: Vec<usize> = d.frames.iter().map(|f| f.frame_index).collect();
        assert_eq!(idx, (3..10).collect::<Vec<_>>());
        assert!(!d.excluded);
        assert_eq!(drop_transition_frames(&s, 0), s);
    }

    #[test]
    fn outlier_frame_rejected() {
        let mut frames: Vec<PressureFrame> = (0..99)
            .map(|i| PressureFrame::new(1, 2, vec![19.5 + (i % 3) as f32 * 0.5; 2], "a", "b", i).unwrap())
            .collect();
        frames.push(PressureFrame::new(1, 2, vec![95.0; 2], "a", "b", 99).unwrap());
        // Independent band: mu and population sigma over the 100 means.
        let means: Vec<f64> = frames.iter().map(|f| f.values[0] as f64).collect();
        let mu = means.iter().sum::<f64>() / 100.0;
        let var = means.iter().map(|m| (m - mu).powi(2)).sum::<f64>() / 100.0;
        assert!(95.0 > mu + 3.0 * var.sqrt());

        let (kept, rej) = remove_outlier_frames(frames.clone(), 3.0).unwrap();
        assert_eq!(kept.len(), 99);
        assert_eq!(rej.len(), 1);
        assert_eq!(rej[0].frame_index, 99);
        let (kept, rej) = remove_outlier_frames(frames, f64::INFINITY).unwrap();
        assert_eq!((kept.len(), rej.len()), (100, 0));
    }

    #[test]
    fn identical_frames_all_kept() {
        let frames: Vec<_> = (0..5).map(|i| PressureFrame::new(1, 1, vec![3.0], "a", "b", i).unwrap()).collect();
        let (kept, rej) = remove_outlier_frames(frames, 3.0).unwrap();
        assert_eq!((kept.len(), rej.len()), (5, 0));
        assert!(remove_outlier_frames(Vec::new(), 3.0).is_err());
    }

    #[test]
    fn split_examples() {
        let names = |n: usize| (1..=n).map(|i| format!("s{i:02}")).collect::<Vec<_>>();
        let s = split_leave_subjects_out(&names(13), 4).unwrap();
        assert_eq!((s.train_subjects.len(), s.test_subjects.len()), (9, 4));
        assert!(s.test_subjects.contains("s13") && s.test_subjects.contains("s10"));
        let s = split_leave_subjects_out(&names(17), 4).unwrap();
        assert_eq!((s.train_subjects.len(), s.test_subjects.len()), (13, 4));
        let s = split_leave_subjects_out(&names(5), 0).unwrap();
        assert_eq!((s.train_subjects.len(), s.test_subjects.len()), (5, 0));
        assert!(split_leave_subjects_out(&names(4), 4).is_err());
    }

    #[test]
    fn frame_validation() {
        assert!(PressureFrame::new(2, 2, vec![0.0, 1.0, f32::NAN, 2.0], "a", "b", 0).is_err());
        assert!(PressureFrame::new(2, 2, vec![0.0, -1.0, 0.0, 2.0], "a", "b", 0).is_err());
        assert!(PressureFrame::new(2, 2, vec![0.0; 3], "a", "b", 0).is_err());
        let a = PressureFrame::new(1, 1, vec![0.0], "a", "b", 2).unwrap();
        let b = PressureFrame::new(1, 1, vec![0.0], "a", "b", 1).unwrap();
        assert!(PressureSequence::new(25.4, vec![a.clone(), b]).is_err());
        assert!(PressureSequence::new(0.0, vec![a]).is_err());
    }
}
