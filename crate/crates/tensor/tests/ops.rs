//! Forward values against explicit-loop oracles and reverse-mode gradients
//! against central finite differences, op by op, in f64.

use bedpose_tensor::{BatchNormMode, ConvGeometry, Graph, Padding, Tensor, Var};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FD_STEP: f64 = 1e-6;
const GRAD_TOL: f64 = 1e-6;

fn random(rng: &mut ChaCha8Rng, shape: &[usize]) -> Tensor<f64> {
    let n = shape.iter().product();
    Tensor::from_vec(shape, (0..n).map(|_| rng.random_range(-1.0..1.0)).collect())
}

/// Direct 7-loop convolution.
fn conv_oracle(x: &Tensor<f64>, w: &Tensor<f64>, b: Option<&[f64]>, g: &ConvGeometry) -> Tensor<f64> {
    let (n, cin, h, wd) = x.dims4();
    let (cout, _, kh, kw) = w.dims4();
    let (oh, ow) = g.output_size(h, wd, kh, kw);
    let mut out = vec![0.0; n * cout * oh * ow];
    for s in 0..n {
        for o in 0..cout {
            for oy in 0..oh {
                for ox in 0..ow {
                    let mut acc = b.map_or(0.0, |b| b[o]);
                    for i in 0..cin {
                        for ky in 0..kh {
                            for kx in 0..kw {
                                let iy = (oy * g.stride.0 + ky * g.dilation.0) as i64 - g.padding.top as i64;
                                let ix = (ox * g.stride.1 + kx * g.dilation.1) as i64 - g.padding.left as i64;
                                if iy >= 0 && ix >= 0 && (iy as usize) < h && (ix as usize) < wd {
                                    acc += x.data()[((s * cin + i) * h + iy as usize) * wd + ix as usize]
                                        * w.data()[((o * cin + i) * kh + ky) * kw + kx];
                                }
                            }
                        }
                    }
                    out[((s * cout + o) * oh + oy) * ow + ox] = acc;
                }
            }
        }
    }
    Tensor::from_vec(&[n, cout, oh, ow], out)
}

/// Builds `build(leaves)` followed by a squared error against a fixed
/// random target and compares every leaf gradient with central differences.
fn check_gradients(inputs: Vec<Tensor<f64>>, build: impl Fn(&mut Graph<f64>, &[Var]) -> Var) {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let eval = |ins: &[Tensor<f64>], target: Option<&Tensor<f64>>| -> (f64, Vec<Tensor<f64>>, Tensor<f64>) {
        let mut g = Graph::new();
        let leaves: Vec<Var> = ins.iter().map(|t| g.param(t.clone(), true)).collect();
        let out = build(&mut g, &leaves);
        let shape = g.value(out).shape().to_vec();
        let target = target.cloned().unwrap_or_else(|| Tensor::zeros(&shape));
        let planes = shape[0] * shape[1];
        let loss = g.squared_error(out, target.clone(), (0..planes).map(|p| 1.0 + p as f64 * 0.1).collect(), 0.5);
        let grads = g.backward(loss);
        let gs = leaves.iter().map(|&v| grads.get(v).cloned().unwrap_or_else(|| Tensor::zeros(g.value(v).shape())));
        (g.value(loss).item(), gs.collect(), target)
    };
    let (_, _, zeros) = eval(&inputs, None);
    let target = random(&mut rng, zeros.shape());
    let (_, analytic, _) = eval(&inputs, Some(&target));
    for (li, leaf) in inputs.iter().enumerate() {
        for e in 0..leaf.numel() {
            let mut plus = inputs.clone();
            plus[li].data_mut()[e] += FD_STEP;
            let mut minus = inputs.clone();
            minus[li].data_mut()[e] -= FD_STEP;
            let fd = (eval(&plus, Some(&target)).0 - eval(&minus, Some(&target)).0) / (2.0 * FD_STEP);
            let an = analytic[li].data()[e];
            let err = (fd - an).abs() / fd.abs().max(an.abs()).max(1.0);
            assert!(err < GRAD_TOL, "leaf {li} element {e}: analytic {an}, finite difference {fd}");
        }
    }
}

fn geometry(stride: (usize, usize), pad: (usize, usize, usize, usize), dilation: (usize, usize)) -> ConvGeometry {
    ConvGeometry { stride, padding: Padding { top: pad.0, bottom: pad.1, left: pad.2, right: pad.3 }, dilation }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conv2d_matches_direct_loops(
        seed in any::<u64>(),
        n in 1usize..3, cin in 1usize..4, cout in 1usize..4,
        h in 3usize..8, w in 3usize..8, kh in 1usize..4, kw in 1usize..4,
        sy in 1usize..3, sx in 1usize..3, dy in 1usize..3, dx in 1usize..3,
        pad in (0usize..3, 0usize..3, 0usize..3, 0usize..3),
        bias in any::<bool>(),
    ) {
        let g = geometry((sy, sx), pad, (dy, dx));
        prop_assume!(h + pad.0 + pad.1 > dy * (kh - 1) && w + pad.2 + pad.3 > dx * (kw - 1));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random(&mut rng, &[n, cin, h, w]);
        let k = random(&mut rng, &[cout, cin, kh, kw]);
        let b = random(&mut rng, &[cout]);
        let mut graph = Graph::new();
        let (xv, kv) = (graph.input(x.clone()), graph.input(k.clone()));
        let bv = bias.then(|| graph.input(b.clone()));
        let y = graph.conv2d(xv, kv, bv, g);
        let want = conv_oracle(&x, &k, bias.then_some(b.data()), &g);
        prop_assert_eq!(graph.value(y).shape(), want.shape());
        prop_assert!(graph.value(y).max_abs_diff(&want) < 1e-12);
    }
}

#[test]
fn pointwise_conv_takes_the_same_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random(&mut rng, &[2, 3, 4, 5]);
    let k = random(&mut rng, &[4, 3, 1, 1]);
    let mut g = Graph::new();
    let (xv, kv) = (g.input(x.clone()), g.input(k.clone()));
    let y = g.conv2d(xv, kv, None, ConvGeometry::default());
    assert!(g.value(y).max_abs_diff(&conv_oracle(&x, &k, None, &ConvGeometry::default())) < 1e-12);
}

#[test]
fn conv2d_gradients() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for geom in [
        geometry((1, 1), (1, 1, 1, 1), (1, 1)),
        geometry((2, 2), (0, 1, 0, 1), (1, 1)),
        geometry((1, 1), (2, 2, 2, 2), (2, 2)),
        geometry((2, 1), (1, 0, 2, 1), (1, 2)),
    ] {
        let ins = vec![random(&mut rng, &[2, 2, 5, 6]), random(&mut rng, &[3, 2, 3, 3]), random(&mut rng, &[3])];
        check_gradients(ins, move |g, v| g.conv2d(v[0], v[1], Some(v[2]), geom));
    }
    let ins = vec![random(&mut rng, &[2, 3, 4, 4]), random(&mut rng, &[2, 3, 1, 1])];
    check_gradients(ins, |g, v| g.conv2d(v[0], v[1], None, ConvGeometry::default()));
}

#[test]
fn batch_norm_train_mode_normalizes_and_differentiates() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = random(&mut rng, &[3, 2, 3, 4]);
    let mut g = Graph::new();
    let xv = g.input(x.clone());
    let (gamma, beta) = (g.input(Tensor::full(&[2], 1.0)), g.input(Tensor::zeros(&[2])));
    let y = g.batch_norm(xv, gamma, beta, BatchNormMode::Train { eps: 0.0 });
    let (n, c, h, w) = x.dims4();
    for ch in 0..c {
        let vals: Vec<f64> =
            (0..n).flat_map(|s| g.value(y).data()[(s * c + ch) * h * w..(s * c + ch + 1) * h * w].to_vec()).collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / vals.len() as f64;
        assert!(mean.abs() < 1e-12 && (var - 1.0).abs() < 1e-9, "channel {ch}: mean {mean}, var {var}");
    }
    let (mean, var) = g.batch_stats(y).expect("train mode records statistics");
    let m = (n * h * w) as f64;
    let raw: Vec<f64> = (0..n).flat_map(|s| x.data()[s * c * h * w..s * c * h * w + h * w].to_vec()).collect();
    let mu = raw.iter().sum::<f64>() / m;
    assert!((mean[0] - mu).abs() < 1e-12);
    assert!((var[0] - raw.iter().map(|v| (v - mu).powi(2)).sum::<f64>() / (m - 1.0)).abs() < 1e-12);

    let ins = vec![x, random(&mut rng, &[2]), random(&mut rng, &[2])];
    check_gradients(ins, |g, v| g.batch_norm(v[0], v[1], v[2], BatchNormMode::Train { eps: 1e-5 }));
}

#[test]
fn batch_norm_eval_mode_uses_given_statistics() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mean, var) = (vec![0.5, -1.0], vec![4.0, 0.25]);
    let x = random(&mut rng, &[2, 2, 2, 3]);
    let mut g = Graph::new();
    let xv = g.input(x.clone());
    let (gamma, beta) =
        (g.input(Tensor::from_vec(&[2], vec![2.0, 3.0])), g.input(Tensor::from_vec(&[2], vec![0.1, 0.2])));
    let y = g.batch_norm(xv, gamma, beta, BatchNormMode::Eval { mean: &mean, var: &var, eps: 0.0 });
    for (i, (&a, &b)) in x.data().iter().zip(g.value(y).data()).enumerate() {
        let ch = (i / 6) % 2;
        let want = [2.0, 3.0][ch] * (a - mean[ch]) / var[ch].sqrt() + [0.1, 0.2][ch];
        assert!((b - want).abs() < 1e-12);
    }
    assert!(g.batch_stats(y).is_none());
    let ins = vec![x, random(&mut rng, &[2]), random(&mut rng, &[2])];
    check_gradients(ins, move |g, v| {
        g.batch_norm(v[0], v[1], v[2], BatchNormMode::Eval { mean: &[0.5, -1.0], var: &[4.0, 0.25], eps: 1e-5 })
    });
}

#[test]
fn pointwise_nonlinearities() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    // Inputs stay away from the ReLU kink so central differences are valid.
    let x = random(&mut rng, &[2, 3, 3, 3]).map(|v| if v.abs() < 0.05 { v + 0.1 } else { v });
    let mut g = Graph::new();
    let xv = g.input(x.clone());
    let (r, l, t) = (g.relu(xv), g.leaky_relu(xv, 0.2), g.tanh(xv));
    for (i, &a) in x.data().iter().enumerate() {
        assert_eq!(g.value(r).data()[i], a.max(0.0));
        assert_eq!(g.value(l).data()[i], if a > 0.0 { a } else { 0.2 * a });
        assert_eq!(g.value(t).data()[i], a.tanh());
    }
    check_gradients(vec![x.clone()], |g, v| g.leaky_relu(v[0], 0.2));
    check_gradients(vec![x.clone()], |g, v| g.relu(v[0]));
    check_gradients(vec![x], |g, v| g.tanh(v[0]));
}

#[test]
fn upsample_repeats_cells() {
    let x = Tensor::from_vec(&[1, 1, 2, 2], vec![1.0, 2.0, 3.0, 4.0]);
    let mut g = Graph::new();
    let xv = g.input(x);
    let y = g.upsample_nearest(xv, 2, 3);
    let want = [1., 1., 1., 2., 2., 2., 1., 1., 1., 2., 2., 2., 3., 3., 3., 4., 4., 4., 3., 3., 3., 4., 4., 4.];
    assert_eq!(g.value(y).shape(), &[1, 1, 4, 6]);
    assert_eq!(g.value(y).data(), &want);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    check_gradients(vec![random(&mut rng, &[2, 2, 2, 3])], |g, v| g.upsample_nearest(v[0], 2, 2));
}

#[test]
fn concat_and_narrow_move_channels() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (a, b) = (random(&mut rng, &[2, 1, 2, 2]), random(&mut rng, &[2, 3, 2, 2]));
    let mut g = Graph::new();
    let (av, bv) = (g.input(a.clone()), g.input(b.clone()));
    let c = g.concat_channels(&[av, bv]);
    assert_eq!(g.value(c).shape(), &[2, 4, 2, 2]);
    assert_eq!(&g.value(c).data()[0..4], &a.data()[0..4]);
    assert_eq!(&g.value(c).data()[4..16], &b.data()[0..12]);
    assert_eq!(&g.value(c).data()[16..20], &a.data()[4..8]);
    let back = g.narrow_channels(c, 1, 3);
    assert_eq!(g.value(back).data(), b.data());
    check_gradients(vec![a.clone(), b.clone()], |g, v| {
        let c = g.concat_channels(&[v[0], v[1], v[0]]);
        g.narrow_channels(c, 1, 4)
    });
}

#[test]
fn weighted_sum_of_losses() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (x, t) = (random(&mut rng, &[2, 2, 3, 3]), random(&mut rng, &[2, 2, 3, 3]));
    let weights = vec![1.0, 0.0, 2.0, 0.5];
    let mut g = Graph::new();
    let xv = g.param(x.clone(), true);
    let a = g.squared_error(xv, t.clone(), weights.clone(), 0.25);
    let b = g.squared_error(xv, Tensor::zeros(&[2, 2, 3, 3]), vec![1.0; 4], 1.0);
    let total = g.weighted_sum(&[(a, 3.0), (b, 0.5)]);
    let mut want = 0.0;
    for (i, (&p, &q)) in x.data().iter().zip(t.data()).enumerate() {
        want += 3.0 * 0.25 * weights[i / 9] * (p - q).powi(2) + 0.5 * p * p;
    }
    assert!((g.value(total).item() - want).abs() < 1e-12);
    let grads = g.backward(total);
    for (i, (&p, &q)) in x.data().iter().zip(t.data()).enumerate() {
        let want = 3.0 * 0.25 * weights[i / 9] * 2.0 * (p - q) + p;
        assert!((grads.get(xv).unwrap().data()[i] - want).abs() < 1e-12);
    }
}

#[test]
fn frozen_leaves_get_no_gradient() {
    let mut g = Graph::new();
    let x = g.input(Tensor::full(&[1, 1, 2, 2], 1.0));
    let w = g.param(Tensor::full(&[1, 1, 1, 1], 2.0), false);
    let y = g.conv2d(x, w, None, ConvGeometry::default());
    let loss = g.squared_error(y, Tensor::zeros(&[1, 1, 2, 2]), vec![1.0], 1.0);
    assert!(!g.requires_grad(loss));
    let watched = g.watched_input(Tensor::full(&[1, 1, 2, 2], 1.0));
    let y2 = g.conv2d(watched, w, None, ConvGeometry::default());
    let loss2 = g.squared_error(y2, Tensor::zeros(&[1, 1, 2, 2]), vec![1.0], 1.0);
    let grads = g.backward(loss2);
    assert!(grads.get(w).is_none());
    assert_eq!(grads.get(watched).unwrap().data(), &[8.0; 4]);
}
