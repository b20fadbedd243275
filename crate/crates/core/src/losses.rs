//! Training objective: masked heatmap and PAF errors, the pixel
//! reconstruction term and their weighted combination.
//!
//! The plain functions evaluate single stacks; the `*_node` variants add
//! the same quantities (batch-averaged) to a computation graph.

use bedpose_tensor::{Graph, Scalar, Tensor, Var};
use serde::{Deserialize, Serialize};

use crate::colormap::{ColorImage, ValueRange};
use crate::error::{Error, Result};
use crate::skeleton::{MapStack, NUM_JOINTS, NUM_PAF_CHANNELS};

fn masked_mse(pred: &MapStack, gt: &MapStack, vis: &[bool], what: &str) -> Result<f64> {
    if !pred.same_dims(gt) || pred.channels != vis.len() {
        return Err(Error::invalid(format!(
            "{what}: prediction {}x{}x{}, target {}x{}x{}, {} visibility flags",
            pred.channels,
            pred.height,
            pred.width,
            gt.channels,
            gt.height,
            gt.width,
            vis.len()
        )));
    }
    let mut total = 0.0f64;
    for (c, _) in vis.iter().enumerate().filter(|(_, v)| **v) {
        total += pred.channel(c).iter().zip(gt.channel(c)).map(|(p, t)| (*p as f64 - *t as f64).powi(2)).sum::<f64>();
    }
    Ok(total / (pred.channels * pred.height * pred.width) as f64)
}

/// `1/(K·H·W) Σ_k V_k Σ_ij (C_k − C'_k)²` with `K = 14`.
pub fn loss_heatmap(pred: &MapStack, gt: &MapStack, vis: &[bool; NUM_JOINTS]) -> Result<f64> {
    masked_mse(pred, gt, vis, "heatmap loss")
}

/// `1/(L·H·W) Σ_l V_l Σ_ij (F_l − F'_l)²` with `L = 28`.
pub fn loss_paf(pred: &MapStack, gt: &MapStack, vis: &[bool; NUM_PAF_CHANNELS]) -> Result<f64> {
    masked_mse(pred, gt, vis, "PAF loss")
}

/// `1/(H·W) Σ_ij ||I − I'||²` summed over the three channels. A [0, 1]
/// input is compared against a [-1, 1] output after `v -> 2v − 1`.
pub fn loss_pixel(input: &ColorImage, polished: &ColorImage) -> Result<f64> {
    if (input.width, input.height) != (polished.width, polished.height) {
        return Err(Error::invalid(format!(
            "pixel loss: input {}x{} vs polished {}x{}",
            input.width, input.height, polished.width, polished.height
        )));
    }
    let input = match (input.range, polished.range) {
        (ValueRange::Unit, ValueRange::Signed) => input.to_signed(),
        (a, b) if a == b => input.clone(),
        _ => return Err(Error::invalid("pixel loss: polished image must be in the network range")),
    };
    let sse: f64 = input.data.iter().zip(&polished.data).map(|(a, b)| (*a as f64 - *b as f64).powi(2)).sum();
    Ok(sse / (input.width * input.height) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PixelSchedule {
    /// `start · (end/start)^progress`.
    Geometric,
    /// `start + (end − start) · progress`.
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StageReduction {
    Sum,
    Mean,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LossWeights {
    pub lambda_heatmap: f64,
    pub lambda_paf: f64,
    pub lambda_pixel_start: f64,
    pub lambda_pixel_end: f64,
    pub pixel_schedule: PixelSchedule,
    pub stage_reduction: StageReduction,
}

impl Default for LossWeights {
    fn default() -> Self {
        LossWeights {
            lambda_heatmap: 1.0,
            lambda_paf: 1.0,
            lambda_pixel_start: 1.0,
            lambda_pixel_end: 0.01,
            pixel_schedule: PixelSchedule::Geometric,
            stage_reduction: StageReduction::Sum,
        }
    }
}

impl LossWeights {
    pub fn validate(&self) -> Result<()> {
        let all = [self.lambda_heatmap, self.lambda_paf, self.lambda_pixel_start, self.lambda_pixel_end];
        if all.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::invalid(format!("loss weights must be finite and >= 0, got {all:?}")));
        }
        Ok(())
    }

    /// Pixel weight at training progress `p` in [0, 1]; the endpoints are
    /// returned exactly. A geometric schedule with a zero endpoint falls
    /// back to linear.
    pub fn lambda_pixel(&self, progress: f64) -> f64 {
        let (s, e) = (self.lambda_pixel_start, self.lambda_pixel_end);
        let p = progress.clamp(0.0, 1.0);
        if p == 0.0 {
            return s;
        }
        if p == 1.0 {
            return e;
        }
        match self.pixel_schedule {
            PixelSchedule::Geometric if s > 0.0 && e > 0.0 => s * (e / s).powf(p),
            _ => s + (e - s) * p,
        }
    }
}

/// Loss terms of one evaluation; `None` for absent terms (PAF on
/// heatmap-only heads, pixel without a polishing network).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct LossComponents {
    pub heatmap: f64,
    pub paf: Option<f64>,
    pub pixel: Option<f64>,
}

pub fn loss_combined(c: &LossComponents, w: &LossWeights, progress: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&progress) {
        return Err(Error::invalid(format!("training progress must lie in [0, 1], got {progress}")));
    }
    w.validate()?;
    Ok(w.lambda_heatmap * c.heatmap
        + c.paf.map_or(0.0, |v| w.lambda_paf * v)
        + c.pixel.map_or(0.0, |v| w.lambda_pixel(progress) * v))
}

fn vis_weights<T: Scalar, const N: usize>(vis: &[[bool; N]]) -> Vec<T> {
    vis.iter().flat_map(|v| v.iter().map(|&b| if b { T::one() } else { T::zero() })).collect()
}

/// Batch mean of the per-sample heatmap loss. `target` is `[N, 14, H, W]`.
pub fn heatmap_loss_node<T: Scalar>(g: &mut Graph<T>, pred: Var, target: Tensor<T>, vis: &[[bool; NUM_JOINTS]]) -> Var {
    let (n, c, h, w) = target.dims4();
    let scale = T::lit(1.0 / (n * c * h * w) as f64);
    g.squared_error(pred, target, vis_weights(vis), scale)
}

/// Batch mean of the per-sample PAF loss. `target` is `[N, 28, H, W]`.
pub fn paf_loss_node<T: Scalar>(
    g: &mut Graph<T>,
    pred: Var,
    target: Tensor<T>,
    vis: &[[bool; NUM_PAF_CHANNELS]],
) -> Var {
    let (n, c, h, w) = target.dims4();
    let scale = T::lit(1.0 / (n * c * h * w) as f64);
    g.squared_error(pred, target, vis_weights(vis), scale)
}

/// Batch mean of the per-sample pixel loss; `target` is the signed input.
pub fn pixel_loss_node<T: Scalar>(g: &mut Graph<T>, polished: Var, target: Tensor<T>) -> Var {
    let (n, c, h, w) = target.dims4();
    let scale = T::lit(1.0 / (n * h * w) as f64);
    g.squared_error(polished, target, vec![T::one(); n * c], scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stack(c: usize, h: usize, w: usize, f: impl Fn(usize) -> f32) -> MapStack {
        MapStack::from_vec(c, h, w, (0..c * h * w).map(f).collect()).unwrap()
    }

    #[test]
    fn zero_and_masked() {
        let a = stack(14, 3, 2, |i| (i % 5) as f32 * 0.1);
        let b = stack(14, 3, 2, |i| (i % 7) as f32 * 0.1);
        assert_eq!(loss_heatmap(&a, &a, &[true; 14]).unwrap(), 0.0);
        assert_eq!(loss_heatmap(&a, &b, &[false; 14]).unwrap(), 0.0);
        assert!(loss_heatmap(&a, &stack(14, 2, 3, |_| 0.0), &[true; 14]).is_err());
    }

    #[test]
    fn paf_constant_residual() {
        let (h, w, r) = (3, 4, 0.5f32);
        let gt = stack(28, h, w, |_| 0.0);
        let pred = stack(28, h, w, |_| r);
        let mut vis = [false; 28];
        vis[5] = true;
        let l = loss_paf(&pred, &gt, &vis).unwrap();
        assert!((l - (r * r) as f64 / 28.0).abs() < 1e-12);
    }

    #[test]
    fn pixel_offset() {
        let data: Vec<f32> = (0..3 * 4 * 5).map(|i| (i % 9) as f32 / 10.0 - 0.5).collect();
        let a = ColorImage::from_planes(5, 4, data.clone(), (4, 5), ValueRange::Signed).unwrap();
        let b = ColorImage { data: data.iter().map(|v| v + 0.1).collect(), ..a.clone() };
        assert!((loss_pixel(&a, &b).unwrap() - 0.03).abs() < 1e-6);
        assert_eq!(loss_pixel(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn schedule_endpoints_and_midpoint() {
        let w = LossWeights::default();
        assert_eq!(w.lambda_pixel(0.0), 1.0);
        assert_eq!(w.lambda_pixel(1.0), 0.01);
        assert!((w.lambda_pixel(0.5) - 0.1).abs() < 1e-12);
        let lin = LossWeights { pixel_schedule: PixelSchedule::Linear, ..w.clone() };
        assert!((lin.lambda_pixel(0.5) - 0.505).abs() < 1e-12);
        let c = LossComponents { heatmap: 2.0, paf: Some(3.0), pixel: Some(10.0) };
        assert!((loss_combined(&c, &w, 1.0).unwrap() - 5.1).abs() < 1e-12);
        let no_paf = LossComponents { paf: None, ..c };
        assert!((loss_combined(&no_paf, &w, 1.0).unwrap() - 2.1).abs() < 1e-12);
        assert!(loss_combined(&c, &w, 1.5).is_err());
    }

    #[test]
    fn graph_nodes_match_plain_losses() {
        let pred = stack(14, 3, 4, |i| ((i * 31) % 17) as f32 / 17.0);
        let gt = stack(14, 3, 4, |i| ((i * 7) % 13) as f32 / 13.0);
        let mut vis = [true; 14];
        vis[3] = false;
        let plain = loss_heatmap(&pred, &gt, &vis).unwrap();
        let mut g = Graph::<f64>::new();
        let p = g.input(Tensor::from_vec(&[1, 14, 3, 4], pred.data.iter().map(|&v| v as f64).collect()));
        let t = Tensor::from_vec(&[1, 14, 3, 4], gt.data.iter().map(|&v| v as f64).collect());
        let node = heatmap_loss_node(&mut g, p, t, &[vis]);
        assert!((g.value(node).item() - plain).abs() < 1e-12);
    }
}
