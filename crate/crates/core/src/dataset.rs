//! On-disk dataset layout: `manifest.json`, one `PMAP` payload per sequence
//! and optional per-sequence annotation files.
//!
//! Payload layout (little-endian): magic `PMAP`, u32 frame count, u32 rows,
//! u32 cols, then `frames × rows × cols` f32 values, row-major, frame-major.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::annotations::AnnotationFile;
use crate::error::{Error, Result};
use crate::pressure::{PreprocessConfig, PressureFrame, PressureSequence};

pub const PAYLOAD_MAGIC: &[u8; 4] = b"PMAP";
const HEADER_LEN: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceEntry {
    pub subject_id: String,
    pub sequence_id: String,
    pub frames_file: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotations_file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub posture_label: Option<String>,
    /// Original frame indices of the payload frames; `0..n` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame_indices: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub name: String,
    pub sensor_pitch_mm: f64,
    pub grid_rows: usize,
    pub grid_cols: usize,
    pub sequences: Vec<SequenceEntry>,
    /// Present once the cleaning chain has been applied to the payloads.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preprocessing: Option<PreprocessConfig>,
}

impl Manifest {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let m: Manifest = serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))?;
        m.validate().map_err(|e| Error::Schema(format!("{}: {e}", path.display())))?;
        Ok(m)
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if !(self.sensor_pitch_mm > 0.0) || !self.sensor_pitch_mm.is_finite() {
            return Err(format!("sensor_pitch_mm must be positive, got {}", self.sensor_pitch_mm));
        }
        if self.grid_rows == 0 || self.grid_cols == 0 {
            return Err(format!("grid dims must be positive, got {}x{}", self.grid_rows, self.grid_cols));
        }
        let mut seen = BTreeSet::new();
        for s in &self.sequences {
            if !seen.insert((&s.subject_id, &s.sequence_id)) {
                return Err(format!("sequence {}/{} listed twice", s.subject_id, s.sequence_id));
            }
        }
        Ok(())
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::io(path, e))
    }
}

/// Raw contents of a payload file.
#[derive(Debug, Clone, PartialEq)]
pub struct Payload {
    pub frames: usize,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f32>,
}

impl Payload {
    pub fn frame(&self, i: usize) -> &[f32] {
        let n = self.rows * self.cols;
        &self.data[i * n..(i + 1) * n]
    }
}

pub fn encode_payload(frames: usize, rows: usize, cols: usize, data: &[f32]) -> Vec<u8> {
    assert_eq!(data.len(), frames * rows * cols, "payload length");
    let mut out = Vec::with_capacity(HEADER_LEN + 4 * data.len());
    out.extend_from_slice(PAYLOAD_MAGIC);
    for v in [frames, rows, cols] {
        out.extend_from_slice(&(v as u32).to_le_bytes());
    }
    for v in data {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

/// Decodes a payload; `what` names the source in error messages.
pub fn decode_payload(bytes: &[u8], what: &str) -> Result<Payload> {
    if bytes.len() < HEADER_LEN || &bytes[..4] != PAYLOAD_MAGIC {
        return Err(Error::Load(format!("{what}: missing PMAP header")));
    }
    let word = |i: usize| u32::from_le_bytes(bytes[4 + 4 * i..8 + 4 * i].try_into().expect("4 bytes")) as usize;
    let (frames, rows, cols) = (word(0), word(1), word(2));
    let frame_bytes = 4 * rows * cols;
    let body = &bytes[HEADER_LEN..];
    if body.len() != frames * frame_bytes {
        let complete = if frame_bytes == 0 { 0 } else { body.len() / frame_bytes };
        return Err(Error::Load(format!(
            "{what}: payload holds {} bytes but header declares {frames} frames of {rows}x{cols}; frame {} is {}",
            body.len(),
            complete.min(frames),
            if body.len() < frames * frame_bytes { "truncated" } else { "followed by trailing bytes" }
        )));
    }
    let data = body.chunks_exact(4).map(|c| f32::from_le_bytes(c.try_into().expect("4 bytes"))).collect();
    Ok(Payload { frames, rows, cols, data })
}

pub fn read_payload(path: &Path) -> Result<Payload> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    decode_payload(&bytes, &path.display().to_string())
}

pub fn write_payload(path: &Path, frames: usize, rows: usize, cols: usize, data: &[f32]) -> Result<()> {
    std::fs::write(path, encode_payload(frames, rows, cols, data)).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub sensor_pitch_mm: f64,
    pub rows: usize,
    pub cols: usize,
    pub sequences: Vec<PressureSequence>,
    pub preprocessing: Option<PreprocessConfig>,
}

impl Dataset {
    pub fn subjects(&self) -> Vec<String> {
        crate::pressure::subjects_in_order(&self.sequences)
    }

    pub fn frames(&self) -> impl Iterator<Item = &PressureFrame> {
        self.sequences.iter().flat_map(|s| s.frames.iter())
    }

    pub fn frame_count(&self) -> usize {
        self.sequences.iter().map(|s| s.len()).sum()
    }

    /// Sequences whose subject is in `subjects`, in dataset order.
    pub fn select_subjects(&self, subjects: &BTreeSet<String>) -> Vec<PressureSequence> {
        self.sequences.iter().filter(|s| subjects.contains(&s.subject_id)).cloned().collect()
    }
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Loads a manifest, its payloads and any annotation files. Annotated
/// keypoints are attached to the matching frames.
pub fn load_dataset(manifest_path: &Path) -> Result<Dataset> {
    let manifest = Manifest::read(manifest_path)?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));
    let mut sequences = Vec::with_capacity(manifest.sequences.len());
    for entry in &manifest.sequences {
        let tag = format!("sequence {}/{}", entry.subject_id, entry.sequence_id);
        let payload = read_payload(&resolve(base, &entry.frames_file))?;
        if (payload.rows, payload.cols) != (manifest.grid_rows, manifest.grid_cols) {
            return Err(Error::Load(format!(
                "{tag}: payload grid {}x{} differs from manifest grid {}x{}",
                payload.rows, payload.cols, manifest.grid_rows, manifest.grid_cols
            )));
        }
        let indices: Vec<usize> = match &entry.frame_indices {
            Some(ix) if ix.len() != payload.frames => {
                return Err(Error::Load(format!(
                    "{tag}: {} frame indices for {} payload frames",
                    ix.len(),
                    payload.frames
                )))
            }
            Some(ix) => ix.clone(),
            None => (0..payload.frames).collect(),
        };
        let mut frames = Vec::with_capacity(payload.frames);
        for (i, &frame_index) in indices.iter().enumerate() {
            let mut frame = PressureFrame::new(
                payload.rows,
                payload.cols,
                payload.frame(i).to_vec(),
                entry.subject_id.clone(),
                entry.sequence_id.clone(),
                frame_index,
            )
            .map_err(|e| Error::Load(format!("{tag}: {e}")))?;
            frame.posture_label = entry.posture_label.clone();
            frames.push(frame);
        }
        if let Some(ann_path) = &entry.annotations_file {
            let ann = AnnotationFile::read(&resolve(base, ann_path))?;
            if ann.subject_id != entry.subject_id || ann.sequence_id != entry.sequence_id {
                return Err(Error::Schema(format!(
                    "{tag}: annotation file is for {}/{}",
                    ann.subject_id, ann.sequence_id
                )));
            }
            let sets = ann.keypoint_sets()?;
            for (idx, kps) in sets {
                let frame = frames
                    .iter_mut()
                    .find(|f| f.frame_index == idx)
                    .ok_or_else(|| Error::Schema(format!("{tag}: annotation references missing frame {idx}")))?;
                frame.keypoints = Some(kps);
            }
        }
        let mut seq = PressureSequence {
            subject_id: entry.subject_id.clone(),
            sequence_id: entry.sequence_id.clone(),
            posture_label: entry.posture_label.clone(),
            sensor_pitch_mm: manifest.sensor_pitch_mm,
            rows: manifest.grid_rows,
            cols: manifest.grid_cols,
            excluded: frames.is_empty(),
            frames,
        };
        seq.validate().map_err(|e| Error::Load(format!("{tag}: {e}")))?;
        seq.excluded = seq.frames.is_empty();
        sequences.push(seq);
    }
    Ok(Dataset {
        name: manifest.name,
        sensor_pitch_mm: manifest.sensor_pitch_mm,
        rows: manifest.grid_rows,
        cols: manifest.grid_cols,
        sequences,
        preprocessing: manifest.preprocessing,
    })
}

/// Writes a dataset under `dir` and returns the manifest path. Payloads go
/// to `frames/`, annotations (for sequences with labelled frames) to
/// `annotations/`.
pub fn write_dataset(dir: &Path, dataset: &Dataset) -> Result<PathBuf> {
    for sub in ["frames", "annotations"] {
        let p = dir.join(sub);
        std::fs::create_dir_all(&p).map_err(|e| Error::io(&p, e))?;
    }
    let mut entries = Vec::with_capacity(dataset.sequences.len());
    for seq in &dataset.sequences {
        if (seq.rows, seq.cols) != (dataset.rows, dataset.cols) {
            return Err(Error::invalid(format!(
                "sequence {}/{} grid {}x{} differs from dataset grid {}x{}",
                seq.subject_id, seq.sequence_id, seq.rows, seq.cols, dataset.rows, dataset.cols
            )));
        }
        let stem = format!("{}_{}", seq.subject_id, seq.sequence_id);
        let frames_file = format!("frames/{stem}.pmap");
        let data: Vec<f32> = seq.frames.iter().flat_map(|f| f.values.iter().copied()).collect();
        write_payload(&dir.join(&frames_file), seq.len(), seq.rows, seq.cols, &data)?;
        let labelled: Vec<(usize, _)> =
            seq.frames.iter().filter_map(|f| f.keypoints.map(|k| (f.frame_index, k))).collect();
        let annotations_file = if labelled.is_empty() {
            None
        } else {
            let rel = format!("annotations/{stem}.json");
            AnnotationFile::new(&seq.subject_id, &seq.sequence_id, &labelled).write(&dir.join(&rel))?;
            Some(rel)
        };
        let contiguous = seq.frames.iter().enumerate().all(|(i, f)| f.frame_index == i);
        entries.push(SequenceEntry {
            subject_id: seq.subject_id.clone(),
            sequence_id: seq.sequence_id.clone(),
            frames_file,
            annotations_file,
            posture_label: seq.posture_label.clone(),
            frame_indices: (!contiguous).then(|| seq.frames.iter().map(|f| f.frame_index).collect()),
        });
    }
    let manifest = Manifest {
        name: dataset.name.clone(),
        sensor_pitch_mm: dataset.sensor_pitch_mm,
        grid_rows: dataset.rows,
        grid_cols: dataset.cols,
        sequences: entries,
        preprocessing: dataset.preprocessing.clone(),
    };
    let path = dir.join("manifest.json");
    manifest.write(&path)?;
    Ok(path)
}
