//! Post-processing of estimator outputs into keypoints: 3×3 Gaussian
//! smoothing, flip-test averaging and argmax decoding to grid coordinates.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::colormap::{apply_colormap, ColorImage, Colormap};
use crate::error::{Error, Result};
use crate::networks::{ExternalEstimator, NetworkParams, PolishNetUSpec, PoseEstimatorSpec};
use crate::pressure::PressureFrame;
use crate::skeleton::{rescale_coord, FlipChannelMap, JointName, Keypoint, KeypointSet, MapStack, NUM_JOINTS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct InferenceConfig {
    /// Width of the normalized 3×3 smoothing kernel; 0 disables smoothing.
    pub smoothing_sigma: f64,
    pub flip_test: bool,
    /// Quarter-cell shift toward the larger neighbour after argmax.
    pub subpixel_refinement: bool,
    pub batch_size: usize,
}

impl Default for InferenceConfig {
    fn default() -> Self {
        InferenceConfig { smoothing_sigma: 0.85, flip_test: true, subpixel_refinement: false, batch_size: 16 }
    }
}

/// Normalized 3×3 Gaussian kernel, row-major.
pub fn smoothing_kernel(sigma: f64) -> [f64; 9] {
    let mut k = [0.0; 9];
    for (i, v) in k.iter_mut().enumerate() {
        let (dy, dx) = ((i / 3) as f64 - 1.0, (i % 3) as f64 - 1.0);
        *v = (-(dx * dx + dy * dy) / (2.0 * sigma * sigma)).exp();
    }
    let s: f64 = k.iter().sum();
    k.map(|v| v / s)
}

/// Convolves every channel with the 3×3 kernel, replicating borders.
pub fn smooth_heatmaps(stack: &MapStack, sigma: f64) -> MapStack {
    if sigma <= 0.0 {
        return stack.clone();
    }
    let k = smoothing_kernel(sigma);
    let (h, w) = (stack.height, stack.width);
    let mut out = stack.clone();
    for c in 0..stack.channels {
        let src = stack.channel(c);
        let dst = out.channel_mut(c);
        for y in 0..h {
            for x in 0..w {
                let mut acc = 0.0f64;
                for (i, kv) in k.iter().enumerate() {
                    let sy = (y as isize + (i / 3) as isize - 1).clamp(0, h as isize - 1) as usize;
                    let sx = (x as isize + (i % 3) as isize - 1).clamp(0, w as isize - 1) as usize;
                    acc += kv * src[sy * w + sx] as f64;
                }
                dst[y * w + x] = acc as f32;
            }
        }
    }
    out
}

/// Heatmaps and optional PAFs for one image.
pub type EstimatorOutput = (MapStack, Option<MapStack>);

/// Anything that maps colorized images to heatmaps.
pub trait Estimator {
    fn estimate(&self, images: &[&ColorImage]) -> Result<Vec<EstimatorOutput>>;
}

/// The in-process estimator; the last stage's maps are used.
#[derive(Debug, Clone)]
pub struct InternalEstimator {
    pub spec: PoseEstimatorSpec,
    pub params: NetworkParams<f32>,
}

impl Estimator for InternalEstimator {
    fn estimate(&self, images: &[&ColorImage]) -> Result<Vec<EstimatorOutput>> {
        Ok(self
            .spec
            .estimate(&self.params, images)?
            .into_iter()
            .map(|mut stages| stages.pop().expect("at least one stage"))
            .collect())
    }
}

impl Estimator for ExternalEstimator {
    fn estimate(&self, images: &[&ColorImage]) -> Result<Vec<EstimatorOutput>> {
        self.run(images)
    }
}

fn average(a: &MapStack, b: &MapStack) -> MapStack {
    let data = a.data.iter().zip(&b.data).map(|(x, y)| 0.5 * (x + y)).collect();
    MapStack { data, ..a.clone() }
}

/// Averages the plain output with the un-flipped output of the mirrored
/// image, remapping left/right channels and PAF signs.
pub fn flip_test(
    estimator: &dyn Estimator,
    images: &[&ColorImage],
    map: &FlipChannelMap,
) -> Result<Vec<EstimatorOutput>> {
    let plain = estimator.estimate(images)?;
    let mirrored: Vec<ColorImage> = images.iter().map(|i| i.flipped_horizontally()).collect();
    let refs: Vec<&ColorImage> = mirrored.iter().collect();
    let flipped = estimator.estimate(&refs)?;
    Ok(plain
        .into_iter()
        .zip(flipped)
        .map(|((hm, paf), (fhm, fpaf))| {
            let hm = average(&hm, &fhm.flipped(&map.heatmap_perm, None));
            let paf = match (paf, fpaf) {
                (Some(p), Some(fp)) => Some(average(&p, &fp.flipped(&map.paf_perm, Some(&map.paf_sign)))),
                _ => None,
            };
            (hm, paf)
        })
        .collect())
}

/// Argmax cell of one channel (first in row-major order on ties).
fn argmax(ch: &[f32]) -> (usize, f32) {
    let mut best = (0, ch[0]);
    for (i, &v) in ch.iter().enumerate().skip(1) {
        if v > best.1 {
            best = (i, v);
        }
    }
    best
}

/// Per-channel argmax mapped from heatmap cells to pressure-grid
/// coordinates (`source_dims` is `(rows, cols)`). Every joint is returned
/// visible with the peak value as score.
pub fn decode_keypoints(stack: &MapStack, source_dims: (usize, usize), subpixel: bool) -> Result<KeypointSet> {
    if stack.channels != NUM_JOINTS || stack.width == 0 || stack.height == 0 {
        return Err(Error::invalid(format!(
            "decoding needs {NUM_JOINTS} non-empty channels, got {}x{}x{}",
            stack.channels, stack.height, stack.width
        )));
    }
    let (rows, cols) = source_dims;
    let (h, w) = (stack.height, stack.width);
    let mut joints = [Keypoint::hidden(); NUM_JOINTS];
    for (c, kp) in joints.iter_mut().enumerate() {
        let ch = stack.channel(c);
        let (i, v) = argmax(ch);
        let (mut x, mut y) = ((i % w) as f64, (i / w) as f64);
        if subpixel {
            let step = |lo: f32, hi: f32| match hi.partial_cmp(&lo) {
                Some(std::cmp::Ordering::Greater) => 0.25,
                Some(std::cmp::Ordering::Less) => -0.25,
                _ => 0.0,
            };
            let (cx, cy) = (i % w, i / w);
            if cx > 0 && cx + 1 < w {
                x += step(ch[cy * w + cx - 1], ch[cy * w + cx + 1]);
            }
            if cy > 0 && cy + 1 < h {
                y += step(ch[(cy - 1) * w + cx], ch[(cy + 1) * w + cx]);
            }
        }
        *kp = Keypoint {
            x: rescale_coord(x, w, cols),
            y: rescale_coord(y, h, rows),
            visible: true,
            score: Some(v as f64),
        };
    }
    Ok(KeypointSet { joints })
}

/// Colorization settings shared by training and inference.
#[derive(Debug, Clone, PartialEq)]
pub struct Colorizer {
    pub colormap: Colormap,
    pub p_max: f32,
    pub working_resolution: (usize, usize),
}

impl Colorizer {
    pub fn image(&self, frame: &PressureFrame) -> Result<ColorImage> {
        let (w, h) = self.working_resolution;
        Ok(apply_colormap(frame, &self.colormap, self.p_max)?.resized(w, h))
    }
}

/// Polishing network plus an estimator.
pub struct Pipeline {
    pub colorizer: Colorizer,
    pub polish: Option<(PolishNetUSpec, NetworkParams<f32>)>,
    pub estimator: Box<dyn Estimator + Send + Sync>,
    pub config: InferenceConfig,
    pub flip_map: FlipChannelMap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub subject_id: String,
    pub sequence_id: String,
    pub frame_index: usize,
    pub keypoints: KeypointSet,
    /// Output of the polishing network, when present.
    pub polished: Option<ColorImage>,
}

impl Pipeline {
    /// Colorize, resize, optionally polish, estimate (with flip-test),
    /// smooth and decode every frame. Frames are expected to have passed
    /// the cleaning chain already.
    pub fn predict(&self, frames: &[&PressureFrame]) -> Result<Vec<Prediction>> {
        let mut out = Vec::with_capacity(frames.len());
        for chunk in frames.chunks(self.config.batch_size.max(1)) {
            let images = chunk.iter().map(|f| self.colorizer.image(f)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&ColorImage> = images.iter().collect();
            let polished = match &self.polish {
                Some((spec, params)) => Some(spec.polish(params, &refs)?),
                None => None,
            };
            let est_in: Vec<&ColorImage> = match &polished {
                Some(p) => p.iter().collect(),
                None => refs.clone(),
            };
            let maps = if self.config.flip_test {
                flip_test(self.estimator.as_ref(), &est_in, &self.flip_map)?
            } else {
                self.estimator.estimate(&est_in)?
            };
            for (i, (frame, (hm, _))) in chunk.iter().zip(maps).enumerate() {
                let smoothed = smooth_heatmaps(&hm, self.config.smoothing_sigma);
                let keypoints = decode_keypoints(&smoothed, (frame.rows, frame.cols), self.config.subpixel_refinement)?;
                out.push(Prediction {
                    subject_id: frame.subject_id.clone(),
                    sequence_id: frame.sequence_id.clone(),
                    frame_index: frame.frame_index,
                    keypoints,
                    polished: polished.as_ref().map(|p| p[i].clone()),
                });
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PredictedKeypoint {
    pub name: String,
    pub x: f64,
    pub y: f64,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramePrediction {
    pub frame_index: usize,
    pub keypoints: Vec<PredictedKeypoint>,
}

impl FramePrediction {
    pub fn from_keypoints(frame_index: usize, kps: &KeypointSet) -> Self {
        FramePrediction {
            frame_index,
            keypoints: JointName::ALL
                .iter()
                .map(|j| PredictedKeypoint {
                    name: j.name().to_string(),
                    x: kps[*j].x,
                    y: kps[*j].y,
                    score: kps[*j].score.unwrap_or(0.0),
                })
                .collect(),
        }
    }

    pub fn to_keypoints(&self) -> Result<KeypointSet> {
        if self.keypoints.len() != NUM_JOINTS {
            return Err(Error::Schema(format!(
                "frame {}: expected {NUM_JOINTS} keypoints, got {}",
                self.frame_index,
                self.keypoints.len()
            )));
        }
        let mut joints = [Keypoint::hidden(); NUM_JOINTS];
        for (j, kp) in JointName::ALL.iter().zip(&self.keypoints) {
            if kp.name != j.name() {
                return Err(Error::Schema(format!(
                    "frame {}: expected `{}` at position {}, found `{}`",
                    self.frame_index,
                    j.name(),
                    j.index(),
                    kp.name
                )));
            }
            joints[j.index()] = Keypoint { x: kp.x, y: kp.y, visible: true, score: Some(kp.score) };
        }
        Ok(KeypointSet { joints })
    }
}

/// Predictions of one sequence as written to disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PredictionFile {
    pub subject_id: String,
    pub sequence_id: String,
    pub predictions: Vec<FramePrediction>,
}

impl PredictionFile {
    /// Groups predictions by sequence, keeping first-appearance order.
    pub fn group(preds: &[Prediction]) -> Vec<PredictionFile> {
        let mut files: Vec<PredictionFile> = Vec::new();
        for p in preds {
            let fp = FramePrediction::from_keypoints(p.frame_index, &p.keypoints);
            match files.iter_mut().find(|f| f.subject_id == p.subject_id && f.sequence_id == p.sequence_id) {
                Some(f) => f.predictions.push(fp),
                None => files.push(PredictionFile {
                    subject_id: p.subject_id.clone(),
                    sequence_id: p.sequence_id.clone(),
                    predictions: vec![fp],
                }),
            }
        }
        files
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        std::fs::write(path, s).map_err(|e| Error::io(path, e))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_is_normalized_and_center_weight() {
        let k = smoothing_kernel(0.85);
        assert!((k.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let e1 = (-1.0 / (2.0 * 0.85f64.powi(2))).exp();
        let e2 = (-2.0 / (2.0 * 0.85f64.powi(2))).exp();
        assert!((k[4] - 1.0 / (1.0 + 4.0 * e1 + 4.0 * e2)).abs() < 1e-12);
    }

    #[test]
    fn constant_channel_unchanged() {
        let s = MapStack::from_vec(NUM_JOINTS, 4, 5, vec![0.3; NUM_JOINTS * 20]).unwrap();
        let out = smooth_heatmaps(&s, 0.85);
        assert!(out.data.iter().all(|v| (v - 0.3).abs() < 1e-6));
    }

    #[test]
    fn one_hot_and_ties() {
        let mut s = MapStack::zeros(NUM_JOINTS, 8, 12);
        s.channel_mut(0)[5 * 12 + 9] = 1.0;
        for c in 1..NUM_JOINTS {
            s.channel_mut(c).fill(0.25);
        }
        let k = decode_keypoints(&s, (8, 12), false).unwrap();
        assert_eq!((k.joints[0].x, k.joints[0].y, k.joints[0].score), (9.0, 5.0, Some(1.0)));
        assert_eq!((k.joints[3].x, k.joints[3].y, k.joints[3].score), (0.0, 0.0, Some(0.25)));
    }

    #[test]
    fn decoding_maps_cell_centers() {
        let mut s = MapStack::zeros(NUM_JOINTS, 4, 4);
        s.channel_mut(0)[4 + 2] = 1.0;
        let k = decode_keypoints(&s, (8, 8), false).unwrap();
        assert_eq!((k.joints[0].x, k.joints[0].y), (4.5, 2.5));
    }

    #[test]
    fn prediction_json_order() {
        let kps = KeypointSet { joints: [Keypoint { x: 1.0, y: 2.0, visible: true, score: Some(0.5) }; NUM_JOINTS] };
        let fp = FramePrediction::from_keypoints(3, &kps);
        assert_eq!(fp.keypoints[0].name, "head");
        assert_eq!(fp.to_keypoints().unwrap(), kps);
        let mut bad = fp.clone();
        bad.keypoints.swap(0, 1);
        assert!(bad.to_keypoints().is_err());
    }
}
