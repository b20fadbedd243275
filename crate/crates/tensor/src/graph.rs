//! Tape-based reverse-mode differentiation over NCHW tensors.
//!
//! Every op appends a node holding its forward value; [`Graph::backward`]
//! walks the tape in reverse and returns gradients for trainable leaves.

use crate::conv::{col2im, im2col, ConvGeometry, ConvShape};
use crate::scalar::{gemm, MatRef};
use crate::{Scalar, Tensor};

/// Handle to a node on the tape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(usize);

impl Var {
    pub fn index(self) -> usize {
        self.0
    }
}

/// How a batch-normalization node obtains its statistics.
#[derive(Debug, Clone, Copy)]
pub enum BatchNormMode<'a, T> {
    /// Normalize with the statistics of the current batch.
    Train { eps: T },
    /// Normalize with stored running statistics.
    Eval { mean: &'a [T], var: &'a [T], eps: T },
}

#[derive(Debug)]
enum Op<T> {
    Leaf,
    Conv2d {
        x: usize,
        w: usize,
        b: Option<usize>,
        geom: ConvGeometry,
    },
    BatchNorm {
        x: usize,
        gamma: usize,
        beta: usize,
        xhat: Vec<T>,
        inv_std: Vec<T>,
        train: bool,
        // batch mean and unbiased batch variance (train mode only)
        stats: Option<(Vec<T>, Vec<T>)>,
    },
    LeakyRelu {
        x: usize,
        slope: T,
    },
    Tanh {
        x: usize,
    },
    Upsample {
        x: usize,
        fy: usize,
        fx: usize,
    },
    Concat {
        xs: Vec<usize>,
    },
    Narrow {
        x: usize,
        start: usize,
    },
    SqError {
        x: usize,
        target: Tensor<T>,
        weights: Vec<T>,
        scale: T,
    },
    WeightedSum {
        terms: Vec<(usize, T)>,
    },
}

#[derive(Debug)]
struct Node<T> {
    value: Tensor<T>,
    op: Op<T>,
    requires_grad: bool,
}

/// Gradients of a scalar with respect to the trainable leaves of a graph.
#[derive(Debug)]
pub struct Gradients<T> {
    grads: Vec<Option<Tensor<T>>>,
}

impl<T: Scalar> Gradients<T> {
    pub fn get(&self, v: Var) -> Option<&Tensor<T>> {
        self.grads.get(v.0).and_then(|g| g.as_ref())
    }

    pub fn take(&mut self, v: Var) -> Option<Tensor<T>> {
        self.grads.get_mut(v.0).and_then(|g| g.take())
    }
}

#[derive(Debug, Default)]
pub struct Graph<T> {
    nodes: Vec<Node<T>>,
}

impl<T: Scalar> Graph<T> {
    pub fn new() -> Self {
        Self { nodes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn push(&mut self, value: Tensor<T>, op: Op<T>, requires_grad: bool) -> Var {
        self.nodes.push(Node { value, op, requires_grad });
        Var(self.nodes.len() - 1)
    }

    fn rg(&self, i: usize) -> bool {
        self.nodes[i].requires_grad
    }

    /// Constant input; never receives a gradient.
    pub fn input(&mut self, t: Tensor<T>) -> Var {
        self.push(t, Op::Leaf, false)
    }

    /// Parameter leaf. Gradients are produced only when `trainable`.
    pub fn param(&mut self, t: Tensor<T>, trainable: bool) -> Var {
        self.push(t, Op::Leaf, trainable)
    }

    /// Leaf whose gradient is wanted even though it is not a parameter
    /// (for example the input image when checking input sensitivities).
    pub fn watched_input(&mut self, t: Tensor<T>) -> Var {
        self.push(t, Op::Leaf, true)
    }

    pub fn value(&self, v: Var) -> &Tensor<T> {
        &self.nodes[v.0].value
    }

    pub fn requires_grad(&self, v: Var) -> bool {
        self.rg(v.0)
    }

    /// Batch mean and unbiased variance recorded by a train-mode batch norm.
    pub fn batch_stats(&self, v: Var) -> Option<(&[T], &[T])> {
        match &self.nodes[v.0].op {
            Op::BatchNorm { stats: Some((m, var)), .. } => Some((m, var)),
            _ => None,
        }
    }

    /// 2-D convolution. `w` is `[Cout, Cin, kh, kw]`, `b` is `[Cout]`.
    pub fn conv2d(&mut self, x: Var, w: Var, b: Option<Var>, geom: ConvGeometry) -> Var {
        let xv = self.value(x);
        let wv = self.value(w);
        let (n, cin, h, wd) = xv.dims4();
        let (cout, wcin, kh, kw) = wv.dims4();
        assert_eq!(cin, wcin, "conv input has {cin} channels, kernel expects {wcin}");
        let (oh, ow) = geom.output_size(h, wd, kh, kw);
        let shape = ConvShape { cin, h, w: wd, kh, kw, oh, ow };
        let k = cin * kh * kw;
        let p = oh * ow;
        let mut out = vec![T::zero(); n * cout * p];
        let pointwise = geom.is_pointwise(kh, kw);
        let mut cols = if pointwise { Vec::new() } else { vec![T::zero(); k * p] };
        let wmat = MatRef::row_major(wv.data(), cout, k);
        for s in 0..n {
            let xs = &xv.data()[s * cin * h * wd..(s + 1) * cin * h * wd];
            let os = &mut out[s * cout * p..(s + 1) * cout * p];
            if pointwise {
                gemm(T::one(), wmat, MatRef::row_major(xs, k, p), T::zero(), os);
            } else {
                im2col(xs, &shape, &geom, &mut cols);
                gemm(T::one(), wmat, MatRef::row_major(&cols, k, p), T::zero(), os);
            }
        }
        if let Some(b) = b {
            let bv = self.value(b).data();
            assert_eq!(bv.len(), cout, "bias length");
            for s in 0..n {
                for (c, &bias) in bv.iter().enumerate() {
                    for v in &mut out[(s * cout + c) * p..(s * cout + c + 1) * p] {
                        *v += bias;
                    }
                }
            }
        }
        let rg = self.rg(x.0) || self.rg(w.0) || b.is_some_and(|b| self.rg(b.0));
        self.push(Tensor::from_vec(&[n, cout, oh, ow], out), Op::Conv2d { x: x.0, w: w.0, b: b.map(|b| b.0), geom }, rg)
    }

    /// Per-channel batch normalization with affine `gamma`, `beta`.
    pub fn batch_norm(&mut self, x: Var, gamma: Var, beta: Var, mode: BatchNormMode<'_, T>) -> Var {
        let xv = self.value(x);
        let (n, c, h, w) = xv.dims4();
        let hw = h * w;
        let m = n * hw;
        let g = self.value(gamma).data();
        let bt = self.value(beta).data();
        assert_eq!(g.len(), c);
        assert_eq!(bt.len(), c);
        let (mean, var, eps, train) = match mode {
            BatchNormMode::Train { eps } => {
                let mut mean = vec![T::zero(); c];
                let mut var = vec![T::zero(); c];
                for ch in 0..c {
                    let mut sum = 0.0f64;
                    for s in 0..n {
                        sum +=
                            xv.data()[(s * c + ch) * hw..(s * c + ch + 1) * hw].iter().map(|v| v.as_f64()).sum::<f64>();
                    }
                    let mu = sum / m as f64;
                    let mut sq = 0.0f64;
                    for s in 0..n {
                        sq += xv.data()[(s * c + ch) * hw..(s * c + ch + 1) * hw]
                            .iter()
                            .map(|v| (v.as_f64() - mu).powi(2))
                            .sum::<f64>();
                    }
                    mean[ch] = T::lit(mu);
                    var[ch] = T::lit(sq / m as f64);
                }
                (mean, var, eps, true)
            }
            BatchNormMode::Eval { mean, var, eps } => {
                assert_eq!(mean.len(), c);
                assert_eq!(var.len(), c);
                (mean.to_vec(), var.to_vec(), eps, false)
            }
        };
        let inv_std: Vec<T> = var.iter().map(|&v| T::one() / (v + eps).sqrt()).collect();
        let mut xhat = vec![T::zero(); xv.numel()];
        let mut out = vec![T::zero(); xv.numel()];
        for s in 0..n {
            for ch in 0..c {
                let base = (s * c + ch) * hw;
                for i in base..base + hw {
                    let xh = (xv.data()[i] - mean[ch]) * inv_std[ch];
                    xhat[i] = xh;
                    out[i] = g[ch] * xh + bt[ch];
                }
            }
        }
        let stats = train.then(|| {
            let unbiased: Vec<T> =
                if m > 1 { var.iter().map(|&v| v * T::lit(m as f64 / (m - 1) as f64)).collect() } else { var.clone() };
            (mean, unbiased)
        });
        let rg = self.rg(x.0) || self.rg(gamma.0) || self.rg(beta.0);
        let shape = xv.shape().to_vec();
        self.push(
            Tensor::from_vec(&shape, out),
            Op::BatchNorm { x: x.0, gamma: gamma.0, beta: beta.0, xhat, inv_std, train, stats },
            rg,
        )
    }

    pub fn leaky_relu(&mut self, x: Var, slope: T) -> Var {
        let v = self.value(x).map(|a| if a > T::zero() { a } else { a * slope });
        let rg = self.rg(x.0);
        self.push(v, Op::LeakyRelu { x: x.0, slope }, rg)
    }

    pub fn relu(&mut self, x: Var) -> Var {
        self.leaky_relu(x, T::zero())
    }

    pub fn tanh(&mut self, x: Var) -> Var {
        let v = self.value(x).map(|a| a.tanh());
        let rg = self.rg(x.0);
        self.push(v, Op::Tanh { x: x.0 }, rg)
    }

    /// Nearest-neighbour upsampling by integer factors `(fy, fx)`.
    pub fn upsample_nearest(&mut self, x: Var, fy: usize, fx: usize) -> Var {
        let xv = self.value(x);
        let (n, c, h, w) = xv.dims4();
        let (oh, ow) = (h * fy, w * fx);
        let mut out = vec![T::zero(); n * c * oh * ow];
        for plane in 0..n * c {
            let src = &xv.data()[plane * h * w..(plane + 1) * h * w];
            let dst = &mut out[plane * oh * ow..(plane + 1) * oh * ow];
            for oy in 0..oh {
                let srow = &src[(oy / fy) * w..(oy / fy + 1) * w];
                for ox in 0..ow {
                    dst[oy * ow + ox] = srow[ox / fx];
                }
            }
        }
        let rg = self.rg(x.0);
        self.push(Tensor::from_vec(&[n, c, oh, ow], out), Op::Upsample { x: x.0, fy, fx }, rg)
    }

    /// Concatenate along the channel axis.
    pub fn concat_channels(&mut self, xs: &[Var]) -> Var {
        assert!(!xs.is_empty());
        let (n, _, h, w) = self.value(xs[0]).dims4();
        let total_c: usize = xs
            .iter()
            .map(|&v| {
                let (vn, vc, vh, vw) = self.value(v).dims4();
                assert_eq!((vn, vh, vw), (n, h, w), "concat operands differ in N/H/W");
                vc
            })
            .sum();
        let hw = h * w;
        let mut out = Vec::with_capacity(n * total_c * hw);
        for s in 0..n {
            for &v in xs {
                let t = self.value(v);
                let c = t.shape()[1];
                out.extend_from_slice(&t.data()[s * c * hw..(s + 1) * c * hw]);
            }
        }
        let rg = xs.iter().any(|v| self.rg(v.0));
        self.push(Tensor::from_vec(&[n, total_c, h, w], out), Op::Concat { xs: xs.iter().map(|v| v.0).collect() }, rg)
    }

    /// Channels `start..start+len`.
    pub fn narrow_channels(&mut self, x: Var, start: usize, len: usize) -> Var {
        let xv = self.value(x);
        let (n, c, h, w) = xv.dims4();
        assert!(start + len <= c, "channel range {start}+{len} exceeds {c}");
        let hw = h * w;
        let mut out = Vec::with_capacity(n * len * hw);
        for s in 0..n {
            out.extend_from_slice(&xv.data()[(s * c + start) * hw..(s * c + start + len) * hw]);
        }
        let rg = self.rg(x.0);
        self.push(Tensor::from_vec(&[n, len, h, w], out), Op::Narrow { x: x.0, start }, rg)
    }

    /// `scale * sum_{n,c} weights[n*C + c] * sum_{h,w} (x - target)^2` as a scalar.
    pub fn squared_error(&mut self, x: Var, target: Tensor<T>, weights: Vec<T>, scale: T) -> Var {
        let xv = self.value(x);
        assert_eq!(xv.shape(), target.shape(), "prediction and target shapes differ");
        let (n, c, h, w) = xv.dims4();
        assert_eq!(weights.len(), n * c, "one weight per (sample, channel)");
        let hw = h * w;
        let mut total = 0.0f64;
        for (plane, &wt) in weights.iter().enumerate() {
            if wt == T::zero() {
                continue;
            }
            let p = &xv.data()[plane * hw..(plane + 1) * hw];
            let t = &target.data()[plane * hw..(plane + 1) * hw];
            let sse: f64 = p.iter().zip(t).map(|(a, b)| (a.as_f64() - b.as_f64()).powi(2)).sum();
            total += wt.as_f64() * sse;
        }
        let rg = self.rg(x.0);
        self.push(Tensor::scalar(T::lit(total * scale.as_f64())), Op::SqError { x: x.0, target, weights, scale }, rg)
    }

    /// `sum_i coef_i * term_i` over scalar nodes.
    pub fn weighted_sum(&mut self, terms: &[(Var, T)]) -> Var {
        let mut total = T::zero();
        for &(v, coef) in terms {
            total += coef * self.value(v).item();
        }
        let rg = terms.iter().any(|(v, _)| self.rg(v.0));
        self.push(Tensor::scalar(total), Op::WeightedSum { terms: terms.iter().map(|&(v, c)| (v.0, c)).collect() }, rg)
    }

    /// Reverse pass from a scalar node. Gradients are retained for leaves only.
    pub fn backward(&self, loss: Var) -> Gradients<T> {
        assert_eq!(self.value(loss).numel(), 1, "backward needs a scalar loss");
        let mut grads: Vec<Option<Vec<T>>> = (0..self.nodes.len()).map(|_| None).collect();
        grads[loss.0] = Some(vec![T::one()]);
        for i in (0..=loss.0).rev() {
            if !self.nodes[i].requires_grad {
                grads[i] = None;
                continue;
            }
            let Some(g) = grads[i].take() else { continue };
            match &self.nodes[i].op {
                Op::Leaf => {
                    grads[i] = Some(g);
                }
                op => self.backprop_op(i, op, &g, &mut grads),
            }
        }
        Gradients {
            grads: grads
                .into_iter()
                .enumerate()
                .map(|(i, g)| g.map(|d| Tensor::from_vec(self.nodes[i].value.shape(), d)))
                .collect(),
        }
    }

    fn acc<'g>(&self, grads: &'g mut [Option<Vec<T>>], idx: usize) -> Option<&'g mut Vec<T>> {
        if !self.nodes[idx].requires_grad {
            return None;
        }
        let len = self.nodes[idx].value.numel();
        Some(grads[idx].get_or_insert_with(|| vec![T::zero(); len]))
    }

    fn backprop_op(&self, i: usize, op: &Op<T>, g: &[T], grads: &mut [Option<Vec<T>>]) {
        match op {
            Op::Leaf => unreachable!(),
            Op::Conv2d { x, w, b, geom } => self.backprop_conv(i, *x, *w, *b, geom, g, grads),
            Op::BatchNorm { x, gamma, beta, xhat, inv_std, train, .. } => {
                let (n, c, h, w) = self.nodes[*x].value.dims4();
                let hw = h * w;
                let m = (n * hw) as f64;
                let gam = self.nodes[*gamma].value.data();
                let mut sum_dy = vec![0.0f64; c];
                let mut sum_dy_xhat = vec![0.0f64; c];
                for s in 0..n {
                    for ch in 0..c {
                        let base = (s * c + ch) * hw;
                        for j in base..base + hw {
                            sum_dy[ch] += g[j].as_f64();
                            sum_dy_xhat[ch] += (g[j] * xhat[j]).as_f64();
                        }
                    }
                }
                if let Some(dg) = self.acc(grads, *gamma) {
                    for ch in 0..c {
                        dg[ch] += T::lit(sum_dy_xhat[ch]);
                    }
                }
                if let Some(db) = self.acc(grads, *beta) {
                    for ch in 0..c {
                        db[ch] += T::lit(sum_dy[ch]);
                    }
                }
                if let Some(dx) = self.acc(grads, *x) {
                    for s in 0..n {
                        for ch in 0..c {
                            let base = (s * c + ch) * hw;
                            let k = gam[ch] * inv_std[ch];
                            if *train {
                                let mean_dy = T::lit(sum_dy[ch] / m);
                                let mean_dy_xhat = T::lit(sum_dy_xhat[ch] / m);
                                for j in base..base + hw {
                                    dx[j] += k * (g[j] - mean_dy - xhat[j] * mean_dy_xhat);
                                }
                            } else {
                                for j in base..base + hw {
                                    dx[j] += k * g[j];
                                }
                            }
                        }
                    }
                }
            }
            Op::LeakyRelu { x, slope } => {
                let xv = self.nodes[*x].value.data();
                if let Some(dx) = self.acc(grads, *x) {
                    for ((d, &gi), &xi) in dx.iter_mut().zip(g).zip(xv) {
                        *d += if xi > T::zero() { gi } else { gi * *slope };
                    }
                }
            }
            Op::Tanh { x } => {
                let y = self.nodes[i].value.data();
                if let Some(dx) = self.acc(grads, *x) {
                    for ((d, &gi), &yi) in dx.iter_mut().zip(g).zip(y) {
                        *d += gi * (T::one() - yi * yi);
                    }
                }
            }
            Op::Upsample { x, fy, fx } => {
                let (n, c, h, w) = self.nodes[*x].value.dims4();
                let (oh, ow) = (h * fy, w * fx);
                if let Some(dx) = self.acc(grads, *x) {
                    for plane in 0..n * c {
                        let src = &g[plane * oh * ow..(plane + 1) * oh * ow];
                        let dst = &mut dx[plane * h * w..(plane + 1) * h * w];
                        for oy in 0..oh {
                            for ox in 0..ow {
                                dst[(oy / fy) * w + ox / fx] += src[oy * ow + ox];
                            }
                        }
                    }
                }
            }
            Op::Concat { xs } => {
                let (n, total_c, h, w) = self.nodes[i].value.dims4();
                let hw = h * w;
                let mut c_off = 0;
                for &x in xs {
                    let c = self.nodes[x].value.shape()[1];
                    if let Some(dx) = self.acc(grads, x) {
                        for s in 0..n {
                            let src = &g[(s * total_c + c_off) * hw..(s * total_c + c_off + c) * hw];
                            for (d, &v) in dx[s * c * hw..(s + 1) * c * hw].iter_mut().zip(src) {
                                *d += v;
                            }
                        }
                    }
                    c_off += c;
                }
            }
            Op::Narrow { x, start } => {
                let (n, c, h, w) = self.nodes[*x].value.dims4();
                let len = self.nodes[i].value.shape()[1];
                let hw = h * w;
                if let Some(dx) = self.acc(grads, *x) {
                    for s in 0..n {
                        let dst = &mut dx[(s * c + start) * hw..(s * c + start + len) * hw];
                        for (d, &v) in dst.iter_mut().zip(&g[s * len * hw..(s + 1) * len * hw]) {
                            *d += v;
                        }
                    }
                }
            }
            Op::SqError { x, target, weights, scale } => {
                let xv = self.nodes[*x].value.data();
                let hw = xv.len() / weights.len();
                let up = g[0];
                if let Some(dx) = self.acc(grads, *x) {
                    for (plane, &wt) in weights.iter().enumerate() {
                        if wt == T::zero() {
                            continue;
                        }
                        let k = T::lit(2.0) * *scale * wt * up;
                        for j in plane * hw..(plane + 1) * hw {
                            dx[j] += k * (xv[j] - target.data()[j]);
                        }
                    }
                }
            }
            Op::WeightedSum { terms } => {
                for &(t, coef) in terms {
                    if let Some(dt) = self.acc(grads, t) {
                        dt[0] += coef * g[0];
                    }
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn backprop_conv(
        &self,
        i: usize,
        x: usize,
        w: usize,
        b: Option<usize>,
        geom: &ConvGeometry,
        g: &[T],
        grads: &mut [Option<Vec<T>>],
    ) {
        let xv = &self.nodes[x].value;
        let wv = &self.nodes[w].value;
        let (n, cin, h, wd) = xv.dims4();
        let (cout, _, kh, kw) = wv.dims4();
        let (_, _, oh, ow) = self.nodes[i].value.dims4();
        let shape = ConvShape { cin, h, w: wd, kh, kw, oh, ow };
        let k = cin * kh * kw;
        let p = oh * ow;
        let pointwise = geom.is_pointwise(kh, kw);
        let in_len = cin * h * wd;

        if let Some(bi) = b {
            if let Some(db) = self.acc(grads, bi) {
                for s in 0..n {
                    for (c, d) in db.iter_mut().enumerate() {
                        let start = (s * cout + c) * p;
                        *d += g[start..start + p].iter().copied().sum::<T>();
                    }
                }
            }
        }

        if self.nodes[w].requires_grad {
            let mut dw = grads[w].take().unwrap_or_else(|| vec![T::zero(); wv.numel()]);
            let mut cols = if pointwise { Vec::new() } else { vec![T::zero(); k * p] };
            for s in 0..n {
                let xs = &xv.data()[s * in_len..(s + 1) * in_len];
                let gs = MatRef::row_major(&g[s * cout * p..(s + 1) * cout * p], cout, p);
                let colm = if pointwise {
                    MatRef::row_major(xs, k, p)
                } else {
                    im2col(xs, &shape, geom, &mut cols);
                    MatRef::row_major(&cols, k, p)
                };
                gemm(T::one(), gs, colm.t(), T::one(), &mut dw);
            }
            grads[w] = Some(dw);
        }

        if self.nodes[x].requires_grad {
            let mut dx = grads[x].take().unwrap_or_else(|| vec![T::zero(); xv.numel()]);
            let wt = MatRef::row_major(wv.data(), cout, k).t();
            let mut dcols = if pointwise { Vec::new() } else { vec![T::zero(); k * p] };
            for s in 0..n {
                let gs = MatRef::row_major(&g[s * cout * p..(s + 1) * cout * p], cout, p);
                let dxs = &mut dx[s * in_len..(s + 1) * in_len];
                if pointwise {
                    gemm(T::one(), wt, gs, T::one(), dxs);
                } else {
                    gemm(T::one(), wt, gs, T::zero(), &mut dcols);
                    col2im(&dcols, &shape, geom, dxs);
                }
            }
            grads[x] = Some(dx);
        }
    }
}
