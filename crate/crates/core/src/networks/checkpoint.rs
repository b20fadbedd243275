//! Checkpoint directories: `spec.json`, a `params.json` index and one
//! payload per tensor under `tensors/`. Tensor payloads reuse the `PMAP`
//! frame container with the leading dims folded into the frame count; the
//! full shape lives in the index.

use std::collections::BTreeMap;
use std::path::Path;

use bedpose_tensor::Tensor;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::{NetworkParams, PolishNetUSpec, PoseEstimatorSpec};
use crate::dataset::{read_payload, write_payload};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckpointKind {
    PolishnetU,
    PoseEstimator,
}

/// Architecture types that can be stored in a checkpoint.
pub trait NetworkSpec: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug {
    const KIND: CheckpointKind;
    fn reference_params(&self) -> Result<NetworkParams<f32>>;
}

impl NetworkSpec for PolishNetUSpec {
    const KIND: CheckpointKind = CheckpointKind::PolishnetU;
    fn reference_params(&self) -> Result<NetworkParams<f32>> {
        self.init(0)
    }
}

impl NetworkSpec for PoseEstimatorSpec {
    const KIND: CheckpointKind = CheckpointKind::PoseEstimator;
    fn reference_params(&self) -> Result<NetworkParams<f32>> {
        self.init(0)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile<S> {
    network: CheckpointKind,
    frozen: bool,
    spec: S,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IndexEntry {
    name: String,
    shape: Vec<usize>,
    kind: TensorKind,
    file: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum TensorKind {
    Param,
    Buffer,
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    std::fs::write(path, s).map_err(|e| Error::io(path, e))
}

fn read_json<V: DeserializeOwned>(path: &Path) -> Result<V> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
}

fn container_dims(shape: &[usize]) -> (usize, usize, usize) {
    match shape.len() {
        0 => (1, 1, 1),
        1 => (1, 1, shape[0]),
        n => (shape[..n - 2].iter().product(), shape[n - 2], shape[n - 1]),
    }
}

/// Writes named tensors under `dir/tensors/` and returns index entries.
pub(crate) fn write_tensor_set(dir: &Path, tensors: &BTreeMap<String, Tensor<f32>>, index: &str) -> Result<()> {
    let tdir = dir.join("tensors");
    std::fs::create_dir_all(&tdir).map_err(|e| Error::io(&tdir, e))?;
    let mut entries = Vec::new();
    for (name, t) in tensors {
        let file = format!("tensors/{name}.pmap");
        let (f, r, c) = container_dims(t.shape());
        write_payload(&dir.join(&file), f, r, c, t.data())?;
        entries.push(IndexEntry { name: name.clone(), shape: t.shape().to_vec(), kind: TensorKind::Param, file });
    }
    write_json(&dir.join(index), &entries)
}

pub(crate) fn read_tensor_set(dir: &Path, index: &str) -> Result<BTreeMap<String, Tensor<f32>>> {
    let entries: Vec<IndexEntry> = read_json(&dir.join(index))?;
    entries.into_iter().map(|e| Ok((e.name.clone(), read_entry(dir, &e)?))).collect()
}

fn read_entry(dir: &Path, e: &IndexEntry) -> Result<Tensor<f32>> {
    let payload = read_payload(&dir.join(&e.file)).map_err(|err| match err {
        Error::Load(m) => Error::Checkpoint(m),
        other => other,
    })?;
    if (payload.frames, payload.rows, payload.cols) != container_dims(&e.shape) {
        return Err(Error::Checkpoint(format!(
            "tensor `{}`: payload {}x{}x{} does not hold shape {:?}",
            e.name, payload.frames, payload.rows, payload.cols, e.shape
        )));
    }
    Ok(Tensor::from_vec(&e.shape, payload.data))
}

pub fn save_checkpoint<S: NetworkSpec>(dir: &Path, spec: &S, params: &NetworkParams<f32>) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    write_json(&dir.join("spec.json"), &SpecFile { network: S::KIND, frozen: params.frozen, spec })?;
    let tdir = dir.join("tensors");
    std::fs::create_dir_all(&tdir).map_err(|e| Error::io(&tdir, e))?;
    let mut entries = Vec::new();
    for (set, kind) in [(&params.tensors, TensorKind::Param), (&params.buffers, TensorKind::Buffer)] {
        for (name, t) in set {
            let file = format!("tensors/{name}.pmap");
            let (f, r, c) = container_dims(t.shape());
            write_payload(&dir.join(&file), f, r, c, t.data())?;
            entries.push(IndexEntry { name: name.clone(), shape: t.shape().to_vec(), kind, file });
        }
    }
    write_json(&dir.join("params.json"), &entries)
}

/// Loads a checkpoint, verifying the network kind, the tensor layout implied
/// by the stored spec and, when given, equality with `expected`.
pub fn load_checkpoint<S: NetworkSpec>(dir: &Path, expected: Option<&S>) -> Result<(S, NetworkParams<f32>)> {
    let spec_path = dir.join("spec.json");
    let raw: SpecFile<serde_json::Value> = read_json(&spec_path)?;
    if raw.network != S::KIND {
        return Err(Error::Checkpoint(format!(
            "{} holds a {:?} network, expected {:?}",
            dir.display(),
            raw.network,
            S::KIND
        )));
    }
    let spec: S =
        serde_json::from_value(raw.spec).map_err(|e| Error::Checkpoint(format!("{}: {e}", spec_path.display())))?;
    if let Some(exp) = expected {
        if exp != &spec {
            return Err(Error::Checkpoint(format!(
                "{} was trained with spec {spec:?}, configuration asks for {exp:?}",
                dir.display()
            )));
        }
    }
    let entries: Vec<IndexEntry> = read_json(&dir.join("params.json"))?;
    let mut params = NetworkParams { tensors: BTreeMap::new(), buffers: BTreeMap::new(), frozen: raw.frozen };
    for e in &entries {
        let t = read_entry(dir, e)?;
        match e.kind {
            TensorKind::Param => params.tensors.insert(e.name.clone(), t),
            TensorKind::Buffer => params.buffers.insert(e.name.clone(), t),
        };
    }
    spec.reference_params()?.check_layout(&params)?;
    Ok((spec, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let spec = PolishNetUSpec { n_encoder_blocks: 2, base_channels: 2, resolution: (8, 8), ..Default::default() };
        let params = spec.init::<f32>(3).unwrap().set_frozen(true);
        save_checkpoint(dir.path(), &spec, &params).unwrap();
        let (s2, p2) = load_checkpoint::<PolishNetUSpec>(dir.path(), Some(&spec)).unwrap();
        assert_eq!((s2, p2), (spec.clone(), params));

        let other = PolishNetUSpec { base_channels: 3, ..spec };
        assert!(matches!(load_checkpoint(dir.path(), Some(&other)), Err(Error::Checkpoint(_))));
        assert!(matches!(load_checkpoint::<PoseEstimatorSpec>(dir.path(), None), Err(Error::Checkpoint(_))));
    }
}
