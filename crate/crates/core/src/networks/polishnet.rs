use bedpose_tensor::{ConvGeometry, Graph, Padding, Scalar, Var};
use serde::{Deserialize, Serialize};

use super::{images_to_tensor, tensor_to_image, Bound, NetworkParams, ParamBuilder};
use crate::colormap::ColorImage;
use crate::error::{Error, Result};

/// Encoder-decoder with skip connections mapping a colorized pressure image
/// to a polished image in `[-1, 1]`.
///
/// Encoder block `i`: stride-2 conv, batch norm, LeakyReLU, with
/// `base_channels * min(2^i, max_channel_multiplier)` channels. Decoder
/// blocks upsample (nearest, x2), convolve with "same" padding, normalize
/// and activate, then concatenate the mirrored encoder output. A final
/// upsample + conv + tanh produces three channels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PolishNetUSpec {
    pub n_encoder_blocks: usize,
    pub base_channels: usize,
    pub max_channel_multiplier: usize,
    pub kernel_size: usize,
    /// Input and output resolution `(width, height)`.
    pub resolution: (usize, usize),
    pub leaky_slope: f64,
}

impl Default for PolishNetUSpec {
    fn default() -> Self {
        PolishNetUSpec {
            n_encoder_blocks: 8,
            base_channels: 32,
            max_channel_multiplier: 8,
            kernel_size: 4,
            resolution: (256, 256),
            leaky_slope: 0.2,
        }
    }
}

impl PolishNetUSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_encoder_blocks == 0 || self.base_channels == 0 || self.max_channel_multiplier == 0 {
            return Err(Error::invalid("PolishNetU needs at least one block and one channel"));
        }
        if self.kernel_size < 2 {
            return Err(Error::invalid("PolishNetU kernel size must be at least 2"));
        }
        let div = 1usize << self.n_encoder_blocks;
        let (w, h) = self.resolution;
        if w == 0 || h == 0 || w % div != 0 || h % div != 0 {
            return Err(Error::invalid(format!(
                "PolishNetU resolution {w}x{h} must be divisible by {div} (2^{} encoder blocks)",
                self.n_encoder_blocks
            )));
        }
        Ok(())
    }

    pub fn channels(&self, block: usize) -> usize {
        let mult = 1usize.checked_shl(block as u32).unwrap_or(usize::MAX).min(self.max_channel_multiplier);
        self.base_channels * mult
    }

    fn decoder_in_channels(&self, j: usize) -> usize {
        let n = self.n_encoder_blocks;
        if j == 0 {
            self.channels(n - 1)
        } else {
            2 * self.channels(n - 1 - j)
        }
    }

    fn output_in_channels(&self) -> usize {
        if self.n_encoder_blocks == 1 {
            self.channels(0)
        } else {
            2 * self.channels(0)
        }
    }

    /// Spatial size `(w, h)` at the bottleneck.
    pub fn bottleneck_size(&self) -> (usize, usize) {
        let div = 1usize << self.n_encoder_blocks;
        (self.resolution.0 / div, self.resolution.1 / div)
    }

    /// Trainable scalar count, computed from the architecture alone.
    pub fn param_count(&self) -> usize {
        let k2 = self.kernel_size * self.kernel_size;
        let n = self.n_encoder_blocks;
        let mut total = 0;
        for i in 0..n {
            let cin = if i == 0 { 3 } else { self.channels(i - 1) };
            total += cin * self.channels(i) * k2 + 2 * self.channels(i);
        }
        for j in 0..n.saturating_sub(1) {
            let cout = self.channels(n - 2 - j);
            total += self.decoder_in_channels(j) * cout * k2 + 2 * cout;
        }
        total + self.output_in_channels() * 3 * k2 + 3
    }

    pub fn init<T: Scalar>(&self, seed: u64) -> Result<NetworkParams<T>> {
        self.validate()?;
        let k = self.kernel_size;
        let n = self.n_encoder_blocks;
        let mut b = ParamBuilder::new(seed);
        for i in 0..n {
            let cin = if i == 0 { 3 } else { self.channels(i - 1) };
            b.conv(&format!("enc{i}.conv"), self.channels(i), cin, k, k, false);
            b.bn(&format!("enc{i}.bn"), self.channels(i));
        }
        for j in 0..n - 1 {
            let cout = self.channels(n - 2 - j);
            b.conv(&format!("dec{j}.conv"), cout, self.decoder_in_channels(j), k, k, false);
            b.bn(&format!("dec{j}.bn"), cout);
        }
        b.conv("out.conv", 3, self.output_in_channels(), k, k, true);
        Ok(b.finish())
    }

    fn down(&self) -> ConvGeometry {
        // (k - 1) / 2 on every side halves any even input exactly.
        ConvGeometry { stride: (2, 2), padding: Padding::same((self.kernel_size - 1) / 2), dilation: (1, 1) }
    }

    fn same(&self) -> ConvGeometry {
        let k = self.kernel_size;
        ConvGeometry { stride: (1, 1), padding: Padding::same_for_kernel(k, k, 1, 1), dilation: (1, 1) }
    }

    /// Adds the network to `g`; `x` is `[N, 3, H, W]` at the configured resolution.
    pub fn forward<T: Scalar>(&self, g: &mut Graph<T>, b: &mut Bound<'_, T>, x: Var) -> Result<Var> {
        self.validate()?;
        let (_, c, h, w) = g.value(x).dims4();
        if c != 3 || (w, h) != self.resolution {
            return Err(Error::invalid(format!(
                "PolishNetU expects 3x{}x{} input, got {c}x{h}x{w}",
                self.resolution.1, self.resolution.0
            )));
        }
        let slope = T::lit(self.leaky_slope);
        let n = self.n_encoder_blocks;
        let mut enc = Vec::with_capacity(n);
        let mut cur = x;
        for i in 0..n {
            cur = b.conv(g, &format!("enc{i}.conv"), cur, self.down())?;
            cur = b.bn(g, &format!("enc{i}.bn"), cur)?;
            cur = g.leaky_relu(cur, slope);
            enc.push(cur);
        }
        for j in 0..n - 1 {
            let up = g.upsample_nearest(cur, 2, 2);
            let y = b.conv(g, &format!("dec{j}.conv"), up, self.same())?;
            let y = b.bn(g, &format!("dec{j}.bn"), y)?;
            let y = g.leaky_relu(y, slope);
            cur = g.concat_channels(&[y, enc[n - 2 - j]]);
        }
        let up = g.upsample_nearest(cur, 2, 2);
        let y = b.conv(g, "out.conv", up, self.same())?;
        Ok(g.tanh(y))
    }

    /// Inference-mode polishing of a batch of images (stored statistics).
    pub fn polish(&self, params: &NetworkParams<f32>, images: &[&ColorImage]) -> Result<Vec<ColorImage>> {
        let signed: Vec<ColorImage> = images.iter().map(|i| i.to_signed()).collect();
        let refs: Vec<&ColorImage> = signed.iter().collect();
        let mut g = Graph::<f32>::new();
        let frozen = params.clone().set_frozen(true);
        let mut b = Bound::new(&mut g, &frozen, false);
        let x = g.input(images_to_tensor(&refs)?);
        let y = self.forward(&mut g, &mut b, x)?;
        let out = g.value(y);
        Ok(images.iter().enumerate().map(|(i, img)| tensor_to_image(out, i, img.source_grid_dims)).collect())
    }
}
