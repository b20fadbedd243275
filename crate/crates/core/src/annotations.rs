//! Annotation JSON files (one per sequence) and annotator cross-checking.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::skeleton::{JointName, Keypoint, KeypointSet, NUM_JOINTS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeypointRecord {
    pub name: String,
    pub x: f64,
    pub y: f64,
    pub visible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameAnnotation {
    pub frame_index: usize,
    pub keypoints: Vec<KeypointRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotationFile {
    pub subject_id: String,
    pub sequence_id: String,
    pub annotations: Vec<FrameAnnotation>,
}

impl FrameAnnotation {
    pub fn from_keypoints(frame_index: usize, kps: &KeypointSet) -> Self {
        let keypoints = JointName::ALL
            .iter()
            .zip(&kps.joints)
            .map(|(j, k)| KeypointRecord { name: j.name().to_string(), x: k.x, y: k.y, visible: k.visible })
            .collect();
        FrameAnnotation { frame_index, keypoints }
    }

    /// Converts to canonical order; every joint must appear exactly once.
    pub fn to_keypoints(&self) -> Result<KeypointSet> {
        let mut slots: [Option<Keypoint>; NUM_JOINTS] = [None; NUM_JOINTS];
        for rec in &self.keypoints {
            let joint = JointName::from_name(&rec.name).ok_or_else(|| {
                Error::Schema(format!("frame {}: unknown joint name `{}`", self.frame_index, rec.name))
            })?;
            let slot = &mut slots[joint.index()];
            if slot.is_some() {
                return Err(Error::Schema(format!("frame {}: duplicate joint `{}`", self.frame_index, rec.name)));
            }
            if rec.visible && !(rec.x.is_finite() && rec.y.is_finite()) {
                return Err(Error::Schema(format!(
                    "frame {}: joint `{}` has non-finite coordinates",
                    self.frame_index, rec.name
                )));
            }
            *slot = Some(Keypoint { x: rec.x, y: rec.y, visible: rec.visible, score: None });
        }
        let mut joints = [Keypoint::hidden(); NUM_JOINTS];
        for (j, slot) in JointName::ALL.iter().zip(slots) {
            joints[j.index()] =
                slot.ok_or_else(|| Error::Schema(format!("frame {}: joint `{j}` missing", self.frame_index)))?;
        }
        Ok(KeypointSet { joints })
    }
}

impl AnnotationFile {
    pub fn new(subject_id: &str, sequence_id: &str, frames: &[(usize, KeypointSet)]) -> Self {
        AnnotationFile {
            subject_id: subject_id.to_string(),
            sequence_id: sequence_id.to_string(),
            annotations: frames.iter().map(|(i, k)| FrameAnnotation::from_keypoints(*i, k)).collect(),
        }
    }

    /// Parses JSON text and validates every frame.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: AnnotationFile =
            serde_json::from_str(text).map_err(|e| Error::Schema(format!("annotation file: {e}")))?;
        file.keypoint_sets()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("annotation file serializes");
        s.push('\n');
        s
    }

    /// Frame index to keypoints, rejecting repeated frame references.
    pub fn keypoint_sets(&self) -> Result<BTreeMap<usize, KeypointSet>> {
        let mut out = BTreeMap::new();
        for a in &self.annotations {
            if out.insert(a.frame_index, a.to_keypoints()?).is_some() {
                return Err(Error::Schema(format!("frame {} annotated twice", a.frame_index)));
            }
        }
        Ok(out)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Schema(m) => Error::Schema(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::io(path, e))
    }
}

/// One row of an annotator cross-check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointDiff {
    pub frame_index: usize,
    pub joint: JointName,
    /// Euclidean distance in grid pixels; `None` when visibility disagrees
    /// or both annotators marked the joint invisible.
    pub distance: Option<f64>,
    pub visibility_agrees: bool,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheck {
    pub rows: Vec<JointDiff>,
    pub only_in_a: Vec<usize>,
    pub only_in_b: Vec<usize>,
}

impl CrossCheck {
    pub fn flagged(&self) -> impl Iterator<Item = &JointDiff> {
        self.rows.iter().filter(|r| r.flagged)
    }

    /// `frame_index,joint,distance,visibility_agrees,flagged`, one row per
    /// (frame, joint).
    pub fn to_csv(&self) -> String {
        let mut s = String::from("frame_index,joint,distance,visibility_agrees,flagged\n");
        for r in &self.rows {
            let d = r.distance.map_or(String::new(), |d| format!("{d}"));
            s.push_str(&format!("{},{},{},{},{}\n", r.frame_index, r.joint, d, r.visibility_agrees, r.flagged));
        }
        s
    }
}

/// Compares two annotators on their shared frames. A joint is flagged when
/// its distance exceeds `threshold_px` or visibility disagrees.
pub fn cross_check(a: &AnnotationFile, b: &AnnotationFile, threshold_px: f64) -> Result<CrossCheck> {
    let (ka, kb) = (a.keypoint_sets()?, b.keypoint_sets()?);
    let mut rows = Vec::new();
    for (frame, sa) in &ka {
        let Some(sb) = kb.get(frame) else { continue };
        for j in JointName::ALL {
            let (pa, pb) = (sa[j], sb[j]);
            let agrees = pa.visible == pb.visible;
            let distance = (pa.visible && pb.visible).then(|| pa.distance(&pb));
            rows.push(JointDiff {
                frame_index: *frame,
                joint: j,
                distance,
                visibility_agrees: agrees,
                flagged: !agrees || distance.is_some_and(|d| d > threshold_px),
            });
        }
    }
    Ok(CrossCheck {
        rows,
        only_in_a: ka.keys().filter(|f| !kb.contains_key(f)).copied().collect(),
        only_in_b: kb.keys().filter(|f| !ka.contains_key(f)).copied().collect(),
    })
}
