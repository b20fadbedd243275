use bedpose_tensor::Scalar;

use super::{NetworkParams, PoseEstimatorSpec};
use crate::error::{Error, Result};
use crate::skeleton::{FlipChannelMap, NUM_JOINTS};

/// How the channels of a feature map transform under a horizontal flip:
/// channel `c` becomes `sign[c] * channel perm[c]` (mirrored).
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSymmetry {
    pub perm: Vec<usize>,
    pub sign: Vec<f64>,
}

impl ChannelSymmetry {
    pub fn invariant(n: usize) -> Self {
        ChannelSymmetry { perm: (0..n).collect(), sign: vec![1.0; n] }
    }

    pub fn concat(mut self, other: &ChannelSymmetry) -> Self {
        let off = self.perm.len();
        self.perm.extend(other.perm.iter().map(|p| p + off));
        self.sign.extend(&other.sign);
        self
    }

    /// Symmetry of an estimator output block (heatmaps, then PAFs if any).
    pub fn of_outputs(map: &FlipChannelMap, channels: usize) -> Self {
        let mut perm: Vec<usize> = map.heatmap_perm.to_vec();
        let mut sign = vec![1.0; NUM_JOINTS];
        if channels > NUM_JOINTS {
            perm.extend(map.paf_perm.iter().map(|p| p + NUM_JOINTS));
            sign.extend(map.paf_sign.iter().map(|&s| s as f64));
        }
        ChannelSymmetry { perm, sign }
    }
}

/// Projects estimator weights onto the flip-equivariant subspace:
/// `W[o,i,:,kx] <- (W[o,i,:,kx] + s_o s_i W[pi(o),pi(i),:,K-1-kx]) / 2` and
/// `b[o] <- (b[o] + s_o b[pi(o)]) / 2`.
///
/// With the result, flipping the input and running the estimator equals
/// running it and flipping the output with the channel map. Only specs
/// without downsampling layers qualify (stride-2 sampling on even widths
/// is not mirror-symmetric).
pub fn symmetrize_flip<T: Scalar>(
    params: &NetworkParams<T>,
    spec: &PoseEstimatorSpec,
    map: &FlipChannelMap,
) -> Result<NetworkParams<T>> {
    spec.validate()?;
    if spec.input_resolution != spec.heatmap_resolution {
        return Err(Error::invalid("flip symmetrization needs an estimator without downsampling layers"));
    }
    let out_sym = ChannelSymmetry::of_outputs(map, spec.out_channels());
    let mut out = params.clone();
    let features = if spec.backbone_depth > 0 { spec.backbone_channels } else { 3 };
    for t in 0..spec.n_stages {
        for d in 0..spec.stage_dilations.len() {
            let cin = if d > 0 {
                ChannelSymmetry::invariant(spec.stage_channels)
            } else if t == 0 {
                ChannelSymmetry::invariant(features)
            } else {
                ChannelSymmetry::invariant(features).concat(&out_sym)
            };
            symmetrize_layer(
                &mut out,
                &format!("stage{t}.conv{d}"),
                &cin,
                &ChannelSymmetry::invariant(spec.stage_channels),
            )?;
        }
        symmetrize_layer(
            &mut out,
            &format!("stage{t}.out"),
            &ChannelSymmetry::invariant(spec.stage_channels),
            &out_sym,
        )?;
    }
    for i in 0..spec.backbone_depth {
        let cin = if i == 0 { 3 } else { spec.backbone_channels };
        symmetrize_layer(
            &mut out,
            &format!("feat{i}.conv"),
            &ChannelSymmetry::invariant(cin),
            &ChannelSymmetry::invariant(spec.backbone_channels),
        )?;
    }
    Ok(out)
}

fn symmetrize_layer<T: Scalar>(
    params: &mut NetworkParams<T>,
    name: &str,
    cin: &ChannelSymmetry,
    cout: &ChannelSymmetry,
) -> Result<()> {
    let wname = format!("{name}.weight");
    let w = params.get(&wname)?.clone();
    let shape = w.shape().to_vec();
    let (co, ci, kh, kw) = (shape[0], shape[1], shape[2], shape[3]);
    if co != cout.perm.len() || ci != cin.perm.len() {
        return Err(Error::invalid(format!("layer {name}: channel symmetry does not match weight shape {shape:?}")));
    }
    let src = w.data();
    let mut sym = w.clone();
    let idx = |o: usize, i: usize, y: usize, x: usize| ((o * ci + i) * kh + y) * kw + x;
    for o in 0..co {
        for i in 0..ci {
            let s = T::lit(cout.sign[o] * cin.sign[i]);
            for y in 0..kh {
                for x in 0..kw {
                    let mirrored = src[idx(cout.perm[o], cin.perm[i], y, kw - 1 - x)];
                    sym.data_mut()[idx(o, i, y, x)] = (src[idx(o, i, y, x)] + s * mirrored) * T::lit(0.5);
                }
            }
        }
    }
    params.tensors.insert(wname, sym);
    let bname = format!("{name}.bias");
    if let Some(b) = params.tensors.get(&bname).cloned() {
        let mut nb = b.clone();
        for o in 0..co {
            nb.data_mut()[o] = (b.data()[o] + T::lit(cout.sign[o]) * b.data()[cout.perm[o]]) * T::lit(0.5);
        }
        params.tensors.insert(bname, nb);
    }
    Ok(())
}
