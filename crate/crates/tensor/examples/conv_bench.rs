//! Rough conv throughput probe: `cargo run --release -p bedpose-tensor --example conv_bench`.
use std::time::Instant;

use bedpose_tensor::{ConvGeometry, Graph, Padding, Tensor};

fn main() {
    let (n, cin, cout, h, w) = (16, 74, 32, 64, 32);
    let x = Tensor::<f32>::full(&[n, cin, h, w], 0.5);
    let wt = Tensor::<f32>::full(&[cout, cin, 3, 3], 0.01);
    let geom = ConvGeometry { padding: Padding::same(1), ..Default::default() };
    let t = Instant::now();
    let reps = 5;
    for _ in 0..reps {
        let mut g = Graph::new();
        let xv = g.watched_input(x.clone());
        let wv = g.param(wt.clone(), true);
        let y = g.conv2d(xv, wv, None, geom);
        let target = Tensor::zeros(g.value(y).shape());
        let l = g.squared_error(y, target, vec![1.0; n * cout], 1.0);
        let _ = g.backward(l);
    }
    let secs = t.elapsed().as_secs_f64() / reps as f64;
    let flops = 3.0 * 2.0 * (n * cout * cin * 9 * h * w) as f64;
    println!("{:.1} ms per fwd+bwd, {:.1} GFLOP/s", secs * 1e3, flops / secs / 1e9);
}
