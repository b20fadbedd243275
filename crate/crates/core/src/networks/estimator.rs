use bedpose_tensor::{ConvGeometry, Graph, Padding, Scalar, Tensor, Var};
use serde::{Deserialize, Serialize};

use super::{images_to_tensor, Bound, NetworkParams, ParamBuilder};
use crate::colormap::ColorImage;
use crate::error::{Error, Result};
use crate::skeleton::{MapStack, NUM_JOINTS, NUM_PAF_CHANNELS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeadKind {
    /// 14 heatmaps plus 28 PAF channels per stage.
    HeatmapAndPaf,
    /// 14 heatmaps per stage.
    HeatmapOnly,
}

impl HeadKind {
    pub fn out_channels(self) -> usize {
        match self {
            HeadKind::HeatmapAndPaf => NUM_JOINTS + NUM_PAF_CHANNELS,
            HeadKind::HeatmapOnly => NUM_JOINTS,
        }
    }
}

/// Compact convolutional pose machine.
///
/// A backbone of 3x3 conv + BN + ReLU layers brings the input down to the
/// heatmap resolution (one stride-2 layer per halving, per axis), followed
/// by `backbone_depth` layers at that resolution. Each stage applies 3x3
/// convolutions with the configured dilations (ReLU after each) and a 1x1
/// output layer without activation. Stages after the first see the
/// features concatenated with the previous stage's output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PoseEstimatorSpec {
    pub head: HeadKind,
    pub n_stages: usize,
    /// `(width, height)` of the input image.
    pub input_resolution: (usize, usize),
    /// `(width, height)` of the output maps.
    pub heatmap_resolution: (usize, usize),
    pub backbone_channels: usize,
    pub backbone_depth: usize,
    pub stage_channels: usize,
    pub stage_dilations: Vec<usize>,
}

impl Default for PoseEstimatorSpec {
    fn default() -> Self {
        PoseEstimatorSpec {
            head: HeadKind::HeatmapAndPaf,
            n_stages: 7,
            input_resolution: (256, 256),
            heatmap_resolution: (64, 64),
            backbone_channels: 64,
            backbone_depth: 2,
            stage_channels: 64,
            stage_dilations: vec![1, 2, 4],
        }
    }
}

/// Graph nodes of one stage's prediction.
#[derive(Debug, Clone, Copy)]
pub struct StageOutput {
    pub heatmaps: Var,
    pub pafs: Option<Var>,
}

/// Weight std of the per-stage output layers.
const OUTPUT_INIT_STD: f64 = 0.01;

fn log2_exact(ratio: usize) -> Option<usize> {
    ratio.is_power_of_two().then(|| ratio.trailing_zeros() as usize)
}

impl PoseEstimatorSpec {
    pub fn validate(&self) -> Result<()> {
        let (iw, ih) = self.input_resolution;
        let (hw, hh) = self.heatmap_resolution;
        if self.n_stages == 0 || self.stage_channels == 0 || self.backbone_channels == 0 {
            return Err(Error::invalid("estimator needs at least one stage and non-zero widths"));
        }
        if self.stage_dilations.is_empty() || self.stage_dilations.contains(&0) {
            return Err(Error::invalid("stage dilations must be a non-empty list of positive values"));
        }
        if iw == 0 || ih == 0 || hw == 0 || hh == 0 || iw % hw != 0 || ih % hh != 0 {
            return Err(Error::invalid(format!(
                "input resolution {iw}x{ih} must be an integer multiple of heatmap resolution {hw}x{hh}"
            )));
        }
        if log2_exact(iw / hw).is_none() || log2_exact(ih / hh).is_none() {
            return Err(Error::invalid(format!(
                "input/heatmap ratio {}x{} must be a power of two per axis",
                iw / hw,
                ih / hh
            )));
        }
        if self.downsampling_steps().len() + self.backbone_depth == 0 {
            return Err(Error::invalid("estimator backbone needs at least one layer"));
        }
        Ok(())
    }

    /// Per-layer `(stride_y, stride_x)` of the downsampling layers.
    fn downsampling_steps(&self) -> Vec<(usize, usize)> {
        let lx = log2_exact(self.input_resolution.0 / self.heatmap_resolution.0.max(1)).unwrap_or(0);
        let ly = log2_exact(self.input_resolution.1 / self.heatmap_resolution.1.max(1)).unwrap_or(0);
        (0..lx.max(ly)).map(|i| (if i < ly { 2 } else { 1 }, if i < lx { 2 } else { 1 })).collect()
    }

    pub fn out_channels(&self) -> usize {
        self.head.out_channels()
    }

    fn layer_shapes(&self) -> Vec<(String, usize, usize, usize, bool)> {
        // (name, cout, cin, kernel, batch-normed)
        let mut v = Vec::new();
        let mut c = 3;
        for i in 0..self.downsampling_steps().len() {
            v.push((format!("down{i}"), self.backbone_channels, c, 3, true));
            c = self.backbone_channels;
        }
        for i in 0..self.backbone_depth {
            v.push((format!("feat{i}"), self.backbone_channels, c, 3, true));
            c = self.backbone_channels;
        }
        let features = c;
        for t in 0..self.n_stages {
            let mut cin = if t == 0 { features } else { features + self.out_channels() };
            for (d, _) in self.stage_dilations.iter().enumerate() {
                v.push((format!("stage{t}.conv{d}"), self.stage_channels, cin, 3, false));
                cin = self.stage_channels;
            }
            v.push((format!("stage{t}.out"), self.out_channels(), cin, 1, false));
        }
        v
    }

    pub fn param_count(&self) -> usize {
        self.layer_shapes().iter().map(|(_, co, ci, k, bn)| co * ci * k * k + if *bn { 2 * co } else { *co }).sum()
    }

    pub fn init<T: Scalar>(&self, seed: u64) -> Result<NetworkParams<T>> {
        self.validate()?;
        let mut b = ParamBuilder::new(seed);
        for (name, co, ci, k, bn) in self.layer_shapes() {
            if bn {
                b.conv(&format!("{name}.conv"), co, ci, k, k, false);
                b.bn(&format!("{name}.bn"), co);
            } else if name.ends_with(".out") {
                // Near-zero initial maps, so early steps need not shrink
                // large outputs by silencing the stage activations.
                b.conv_with_std(&name, co, ci, k, k, true, OUTPUT_INIT_STD);
            } else {
                b.conv(&name, co, ci, k, k, true);
            }
        }
        Ok(b.finish())
    }

    fn split(&self, g: &mut Graph<impl Scalar>, out: Var) -> StageOutput {
        match self.head {
            HeadKind::HeatmapOnly => StageOutput { heatmaps: out, pafs: None },
            HeadKind::HeatmapAndPaf => StageOutput {
                heatmaps: g.narrow_channels(out, 0, NUM_JOINTS),
                pafs: Some(g.narrow_channels(out, NUM_JOINTS, NUM_PAF_CHANNELS)),
            },
        }
    }

    /// Adds the estimator to `g` and returns every stage's raw output
    /// (`[N, out_channels, H_h, W_h]`), first stage first.
    pub fn forward_raw<T: Scalar>(&self, g: &mut Graph<T>, b: &mut Bound<'_, T>, x: Var) -> Result<Vec<Var>> {
        self.validate()?;
        let (_, c, h, w) = g.value(x).dims4();
        if c != 3 || (w, h) != self.input_resolution {
            return Err(Error::invalid(format!(
                "estimator expects 3x{}x{} input, got {c}x{h}x{w}",
                self.input_resolution.1, self.input_resolution.0
            )));
        }
        let mut cur = x;
        for (i, stride) in self.downsampling_steps().into_iter().enumerate() {
            let geom = ConvGeometry { stride, padding: Padding::same(1), dilation: (1, 1) };
            cur = b.conv(g, &format!("down{i}.conv"), cur, geom)?;
            cur = b.bn(g, &format!("down{i}.bn"), cur)?;
            cur = g.relu(cur);
        }
        for i in 0..self.backbone_depth {
            let geom = ConvGeometry { padding: Padding::same(1), ..Default::default() };
            cur = b.conv(g, &format!("feat{i}.conv"), cur, geom)?;
            cur = b.bn(g, &format!("feat{i}.bn"), cur)?;
            cur = g.relu(cur);
        }
        let features = cur;
        let mut outputs = Vec::with_capacity(self.n_stages);
        for t in 0..self.n_stages {
            let mut y = match outputs.last() {
                None => features,
                Some(&prev) => g.concat_channels(&[features, prev]),
            };
            for (d, &dil) in self.stage_dilations.iter().enumerate() {
                let geom = ConvGeometry { padding: Padding::same(dil), dilation: (dil, dil), ..Default::default() };
                y = b.conv(g, &format!("stage{t}.conv{d}"), y, geom)?;
                y = g.relu(y);
            }
            y = b.conv(g, &format!("stage{t}.out"), y, ConvGeometry::default())?;
            outputs.push(y);
        }
        Ok(outputs)
    }

    /// Like [`forward_raw`](Self::forward_raw) with each stage split into
    /// heatmap and PAF nodes.
    pub fn forward<T: Scalar>(&self, g: &mut Graph<T>, b: &mut Bound<'_, T>, x: Var) -> Result<Vec<StageOutput>> {
        let raw = self.forward_raw(g, b, x)?;
        Ok(raw.into_iter().map(|v| self.split(g, v)).collect())
    }

    /// Inference over a batch of signed images. Returns, per image, one
    /// `(heatmaps, pafs)` pair per stage.
    pub fn estimate(
        &self,
        params: &NetworkParams<f32>,
        images: &[&ColorImage],
    ) -> Result<Vec<Vec<(MapStack, Option<MapStack>)>>> {
        let signed: Vec<ColorImage> = images.iter().map(|i| i.to_signed()).collect();
        let refs: Vec<&ColorImage> = signed.iter().collect();
        let mut g = Graph::<f32>::new();
        let frozen = params.clone().set_frozen(true);
        let mut b = Bound::new(&mut g, &frozen, false);
        let x = g.input(images_to_tensor(&refs)?);
        let stages = self.forward_raw(&mut g, &mut b, x)?;
        let mut per_image = vec![Vec::with_capacity(stages.len()); images.len()];
        for s in stages {
            for (i, slot) in per_image.iter_mut().enumerate() {
                slot.push(self.unpack(g.value(s), i));
            }
        }
        Ok(per_image)
    }

    fn unpack(&self, t: &Tensor<f32>, n: usize) -> (MapStack, Option<MapStack>) {
        let (_, c, h, w) = t.dims4();
        let plane = h * w;
        let sample = &t.data()[n * c * plane..(n + 1) * c * plane];
        let hm = MapStack { channels: NUM_JOINTS, height: h, width: w, data: sample[..NUM_JOINTS * plane].to_vec() };
        let paf = (self.head == HeadKind::HeatmapAndPaf).then(|| MapStack {
            channels: NUM_PAF_CHANNELS,
            height: h,
            width: w,
            data: sample[NUM_JOINTS * plane..].to_vec(),
        });
        (hm, paf)
    }
}
