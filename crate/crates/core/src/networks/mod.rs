//! Differentiable networks: the polishing U-Net and the multi-stage pose
//! estimator, plus parameter storage, checkpoints and the external
//! estimator adapter.

mod adapter;
mod checkpoint;
mod estimator;
mod polishnet;
mod symmetry;

use std::collections::BTreeMap;

use bedpose_tensor::{BatchNormMode, ConvGeometry, Gradients, Graph, Scalar, Tensor, Var};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::colormap::{ColorImage, ValueRange};
use crate::error::{Error, Result};

pub use adapter::{ExternalEstimator, ExternalEstimatorConfig};
pub use checkpoint::{load_checkpoint, save_checkpoint, CheckpointKind, NetworkSpec};
pub(crate) use checkpoint::{read_tensor_set, write_tensor_set};
pub use estimator::{HeadKind, PoseEstimatorSpec, StageOutput};
pub use polishnet::PolishNetUSpec;
pub use symmetry::{symmetrize_flip, ChannelSymmetry};

pub const BN_EPS: f64 = 1e-5;

/// Named parameter tensors of one network plus normalization buffers.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkParams<T> {
    pub tensors: BTreeMap<String, Tensor<T>>,
    /// Running batch-norm statistics (`*.running_mean`, `*.running_var`).
    pub buffers: BTreeMap<String, Tensor<T>>,
    pub frozen: bool,
}

impl<T: Scalar> NetworkParams<T> {
    pub fn set_frozen(mut self, frozen: bool) -> Self {
        self.frozen = frozen;
        self
    }

    /// Number of trainable scalars (buffers excluded).
    pub fn param_count(&self) -> usize {
        self.tensors.values().map(Tensor::numel).sum()
    }

    pub fn cast<U: Scalar>(&self) -> NetworkParams<U> {
        NetworkParams {
            tensors: self.tensors.iter().map(|(k, v)| (k.clone(), v.cast())).collect(),
            buffers: self.buffers.iter().map(|(k, v)| (k.clone(), v.cast())).collect(),
            frozen: self.frozen,
        }
    }

    pub fn get(&self, name: &str) -> Result<&Tensor<T>> {
        self.tensors.get(name).ok_or_else(|| Error::Checkpoint(format!("missing parameter `{name}`")))
    }

    fn buffer(&self, name: &str) -> Result<&Tensor<T>> {
        self.buffers.get(name).ok_or_else(|| Error::Checkpoint(format!("missing buffer `{name}`")))
    }

    /// Checks that `other` has exactly the same names and shapes.
    pub fn check_layout(&self, other: &NetworkParams<T>) -> Result<()> {
        for (set, oset, kind) in
            [(&self.tensors, &other.tensors, "parameter"), (&self.buffers, &other.buffers, "buffer")]
        {
            for (k, v) in set {
                match oset.get(k) {
                    None => return Err(Error::Checkpoint(format!("{kind} `{k}` missing"))),
                    Some(o) if o.shape() != v.shape() => {
                        return Err(Error::Checkpoint(format!(
                            "{kind} `{k}` has shape {:?}, expected {:?}",
                            o.shape(),
                            v.shape()
                        )))
                    }
                    _ => {}
                }
            }
            if let Some(extra) = oset.keys().find(|k| !set.contains_key(*k)) {
                return Err(Error::Checkpoint(format!("unexpected {kind} `{extra}`")));
            }
        }
        Ok(())
    }
}

/// Deterministic parameter initializer: He-normal convolution weights,
/// zero biases, unit/zero batch-norm affine terms.
pub(crate) struct ParamBuilder {
    rng: ChaCha8Rng,
    tensors: BTreeMap<String, Tensor<f64>>,
    buffers: BTreeMap<String, Tensor<f64>>,
}

impl ParamBuilder {
    pub(crate) fn new(seed: u64) -> Self {
        ParamBuilder { rng: ChaCha8Rng::seed_from_u64(seed), tensors: BTreeMap::new(), buffers: BTreeMap::new() }
    }

    /// He-initialized convolution.
    pub(crate) fn conv(&mut self, name: &str, cout: usize, cin: usize, kh: usize, kw: usize, bias: bool) {
        self.conv_with_std(name, cout, cin, kh, kw, bias, (2.0 / (cin * kh * kw) as f64).sqrt());
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn conv_with_std(
        &mut self,
        name: &str,
        cout: usize,
        cin: usize,
        kh: usize,
        kw: usize,
        bias: bool,
        std: f64,
    ) {
        let normal = Normal::new(0.0, std).expect("positive std");
        let data = (0..cout * cin * kh * kw).map(|_| normal.sample(&mut self.rng)).collect();
        self.tensors.insert(format!("{name}.weight"), Tensor::from_vec(&[cout, cin, kh, kw], data));
        if bias {
            self.tensors.insert(format!("{name}.bias"), Tensor::zeros(&[cout]));
        }
    }

    pub(crate) fn bn(&mut self, name: &str, c: usize) {
        self.tensors.insert(format!("{name}.gamma"), Tensor::full(&[c], 1.0));
        self.tensors.insert(format!("{name}.beta"), Tensor::zeros(&[c]));
        self.buffers.insert(format!("{name}.running_mean"), Tensor::zeros(&[c]));
        self.buffers.insert(format!("{name}.running_var"), Tensor::full(&[c], 1.0));
    }

    pub(crate) fn finish<T: Scalar>(self) -> NetworkParams<T> {
        NetworkParams { tensors: self.tensors, buffers: self.buffers, frozen: false }.cast::<T>()
    }
}

/// Parameters of one network placed on a graph.
pub struct Bound<'p, T> {
    params: &'p NetworkParams<T>,
    vars: BTreeMap<String, Var>,
    batch_stats: bool,
    bn_nodes: Vec<(String, Var)>,
}

impl<'p, T: Scalar> Bound<'p, T> {
    /// Adds every tensor as a leaf. Gradients flow to them unless the
    /// network is frozen. `train_mode` selects batch statistics for
    /// normalization; frozen networks always use stored statistics.
    pub fn new(g: &mut Graph<T>, params: &'p NetworkParams<T>, train_mode: bool) -> Self {
        let trainable = !params.frozen;
        let vars = params.tensors.iter().map(|(k, v)| (k.clone(), g.param(v.clone(), trainable))).collect();
        Bound { params, vars, batch_stats: train_mode && !params.frozen, bn_nodes: Vec::new() }
    }

    pub fn var(&self, name: &str) -> Result<Var> {
        self.vars.get(name).copied().ok_or_else(|| Error::Checkpoint(format!("missing parameter `{name}`")))
    }

    pub fn vars(&self) -> impl Iterator<Item = (&String, &Var)> {
        self.vars.iter()
    }

    pub(crate) fn conv(&mut self, g: &mut Graph<T>, name: &str, x: Var, geom: ConvGeometry) -> Result<Var> {
        let w = self.var(&format!("{name}.weight"))?;
        let b = self.vars.get(&format!("{name}.bias")).copied();
        let (_, cin, _, _) = g.value(x).dims4();
        let ws = g.value(w).shape();
        if ws[1] != cin {
            return Err(Error::invalid(format!("layer {name} expects {} input channels, got {cin}", ws[1])));
        }
        Ok(g.conv2d(x, w, b, geom))
    }

    pub(crate) fn bn(&mut self, g: &mut Graph<T>, name: &str, x: Var) -> Result<Var> {
        let gamma = self.var(&format!("{name}.gamma"))?;
        let beta = self.var(&format!("{name}.beta"))?;
        let eps = T::lit(BN_EPS);
        if self.batch_stats {
            let y = g.batch_norm(x, gamma, beta, BatchNormMode::Train { eps });
            self.bn_nodes.push((name.to_string(), y));
            Ok(y)
        } else {
            let mean = self.params.buffer(&format!("{name}.running_mean"))?;
            let var = self.params.buffer(&format!("{name}.running_var"))?;
            Ok(g.batch_norm(x, gamma, beta, BatchNormMode::Eval { mean: mean.data(), var: var.data(), eps }))
        }
    }

    /// Gradients for every trainable tensor, keyed by parameter name.
    pub fn gradients(&self, grads: &Gradients<T>) -> BTreeMap<String, Tensor<T>> {
        self.vars.iter().filter_map(|(k, v)| grads.get(*v).map(|t| (k.clone(), t.clone()))).collect()
    }

    /// Batch mean and unbiased variance recorded by each train-mode
    /// normalization layer.
    pub fn batch_statistics(&self, g: &Graph<T>) -> Vec<(String, Vec<T>, Vec<T>)> {
        self.bn_nodes
            .iter()
            .filter_map(|(name, v)| g.batch_stats(*v).map(|(m, var)| (name.clone(), m.to_vec(), var.to_vec())))
            .collect()
    }
}

/// Exponential moving average of running statistics:
/// `running = (1 - momentum) * running + momentum * batch`.
pub fn update_running_stats<T: Scalar>(
    params: &mut NetworkParams<T>,
    stats: &[(String, Vec<T>, Vec<T>)],
    momentum: f64,
) {
    let m = T::lit(momentum);
    let keep = T::one() - m;
    for (name, mean, var) in stats {
        for (suffix, batch) in [("running_mean", mean), ("running_var", var)] {
            if let Some(buf) = params.buffers.get_mut(&format!("{name}.{suffix}")) {
                for (r, b) in buf.data_mut().iter_mut().zip(batch) {
                    *r = keep * *r + m * *b;
                }
            }
        }
    }
}

/// Packs images into an `[N, 3, H, W]` tensor.
pub fn images_to_tensor<T: Scalar>(images: &[&ColorImage]) -> Result<Tensor<T>> {
    let first = images.first().ok_or_else(|| Error::invalid("empty image batch"))?;
    let (w, h) = (first.width, first.height);
    let mut data = Vec::with_capacity(images.len() * 3 * w * h);
    for img in images {
        if (img.width, img.height) != (w, h) {
            return Err(Error::invalid("images in a batch must share dims"));
        }
        data.extend(img.data.iter().map(|&v| T::lit(v as f64)));
    }
    Ok(Tensor::from_vec(&[images.len(), 3, h, w], data))
}

/// Unpacks sample `n` of an `[N, 3, H, W]` tensor into a signed image.
pub fn tensor_to_image<T: Scalar>(t: &Tensor<T>, n: usize, source_grid_dims: (usize, usize)) -> ColorImage {
    let (_, c, h, w) = t.dims4();
    assert_eq!(c, 3, "image tensors have 3 channels");
    let len = 3 * h * w;
    let data = t.data()[n * len..(n + 1) * len].iter().map(|v| v.as_f64().clamp(-1.0, 1.0) as f32).collect();
    ColorImage { width: w, height: h, data, source_grid_dims, range: ValueRange::Signed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_is_seeded() {
        let build = |seed| {
            let mut b = ParamBuilder::new(seed);
            b.conv("c", 4, 3, 3, 3, true);
            b.bn("n", 4);
            b.finish::<f32>()
        };
        assert_eq!(build(1), build(1));
        assert_ne!(build(1), build(2));
        let p = build(1);
        assert_eq!(p.param_count(), 4 * 3 * 9 + 4 + 4 + 4);
        assert!(p.check_layout(&build(3)).is_ok());
    }

    #[test]
    fn running_stats_ema() {
        let mut b = ParamBuilder::new(0);
        b.bn("n", 2);
        let mut p = b.finish::<f64>();
        update_running_stats(&mut p, &[("n".into(), vec![1.0, 2.0], vec![3.0, 5.0])], 0.5);
        assert_eq!(p.buffers["n.running_mean"].data(), &[0.5, 1.0]);
        assert_eq!(p.buffers["n.running_var"].data(), &[2.0, 3.0]);
    }
}
