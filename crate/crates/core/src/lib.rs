//! In-bed pose estimation from pressure-mat recordings.
//!
//! The crate covers the whole pipeline: cleaning and colorizing pressure
//! sequences, ground-truth rendering, the polishing U-Net and multi-stage
//! pose estimator, training, inference post-processing, evaluation and a
//! synthetic data generator.

pub mod annotations;
pub mod colormap;
mod colormap_data;
pub mod config;
pub mod dataset;
pub mod error;
pub mod evaluation;
pub mod experiment;
pub mod inference;
pub mod losses;
pub mod networks;
pub mod plot;
pub mod pressure;
pub mod seeds;
pub mod skeleton;
pub mod synthetic;
pub mod training;

pub use error::{Error, Result};
