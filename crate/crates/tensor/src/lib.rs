//! Minimal CPU tensor engine with reverse-mode automatic differentiation,
//! sized for small convolutional pose networks.

mod conv;
mod graph;
mod scalar;
mod tensor;

pub use conv::{ConvGeometry, Padding};
pub use graph::{BatchNormMode, Gradients, Graph, Var};
pub use scalar::{gemm, MatRef, Scalar};
pub use tensor::Tensor;
