//! Bridge to an out-of-process pose estimator.
//!
//! For a batch, images are written as `in/NNNNNN.png` in the exchange
//! directory and the program is invoked as `program [args..] IN_DIR OUT_DIR`.
//! It must write `OUT_DIR/NNNNNN_heatmaps.pmap` (14 frames) and, for PAF
//! heads, `OUT_DIR/NNNNNN_pafs.pmap` (28 frames), using the pressure payload
//! container with frames reinterpreted as channels.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::colormap::ColorImage;
use crate::dataset::read_payload;
use crate::error::{Error, Result};
use crate::skeleton::{MapStack, NUM_JOINTS, NUM_PAF_CHANNELS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExternalEstimatorConfig {
    pub program: PathBuf,
    #[serde(default)]
    pub args: Vec<String>,
    pub exchange_dir: PathBuf,
    #[serde(default = "default_timeout")]
    pub timeout_secs: f64,
    /// `(width, height)` the program's maps must have.
    pub heatmap_resolution: (usize, usize),
    #[serde(default)]
    pub expect_pafs: bool,
}

fn default_timeout() -> f64 {
    60.0
}

#[derive(Debug, Clone)]
pub struct ExternalEstimator {
    cfg: ExternalEstimatorConfig,
    program: PathBuf,
}

fn locate(program: &Path) -> Option<PathBuf> {
    if program.components().count() > 1 || program.is_absolute() {
        return program.is_file().then(|| program.to_path_buf());
    }
    std::env::var_os("PATH")
        .into_iter()
        .flat_map(|p| std::env::split_paths(&p).collect::<Vec<_>>())
        .map(|d| d.join(program))
        .find(|p| p.is_file())
}

impl ExternalEstimator {
    /// Validates the configuration up front; a missing program is a
    /// configuration error rather than a failure in the middle of a run.
    pub fn new(cfg: ExternalEstimatorConfig) -> Result<Self> {
        let program = locate(&cfg.program)
            .ok_or_else(|| Error::Config(format!("external estimator `{}` not found", cfg.program.display())))?;
        if !(cfg.timeout_secs > 0.0) {
            return Err(Error::Config(format!("adapter timeout must be positive, got {}", cfg.timeout_secs)));
        }
        if cfg.heatmap_resolution.0 == 0 || cfg.heatmap_resolution.1 == 0 {
            return Err(Error::Config("adapter heatmap resolution must be positive".into()));
        }
        std::fs::create_dir_all(&cfg.exchange_dir).map_err(|e| Error::io(&cfg.exchange_dir, e))?;
        Ok(ExternalEstimator { cfg, program })
    }

    pub fn run(&self, images: &[&ColorImage]) -> Result<Vec<(MapStack, Option<MapStack>)>> {
        let in_dir = self.cfg.exchange_dir.join("in");
        let out_dir = self.cfg.exchange_dir.join("out");
        for d in [&in_dir, &out_dir] {
            if d.exists() {
                std::fs::remove_dir_all(d).map_err(|e| Error::io(d, e))?;
            }
            std::fs::create_dir_all(d).map_err(|e| Error::io(d, e))?;
        }
        for (i, img) in images.iter().enumerate() {
            img.write_png(&in_dir.join(format!("{i:06}.png")))?;
        }
        let mut child = Command::new(&self.program)
            .args(&self.cfg.args)
            .arg(&in_dir)
            .arg(&out_dir)
            .stdout(Stdio::null())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| Error::Adapter(format!("cannot start `{}`: {e}", self.program.display())))?;
        let deadline = Instant::now() + Duration::from_secs_f64(self.cfg.timeout_secs);
        let status = loop {
            match child.try_wait().map_err(|e| Error::Adapter(format!("waiting for adapter: {e}")))? {
                Some(status) => break status,
                None if Instant::now() >= deadline => {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Err(Error::Adapter(format!(
                        "`{}` exceeded the {}s timeout on a batch of {} images",
                        self.program.display(),
                        self.cfg.timeout_secs,
                        images.len()
                    )));
                }
                None => std::thread::sleep(Duration::from_millis(10)),
            }
        };
        if !status.success() {
            let mut stderr = String::new();
            if let Some(mut s) = child.stderr.take() {
                use std::io::Read;
                let _ = s.read_to_string(&mut stderr);
            }
            let tail: String = stderr.lines().last().unwrap_or("").chars().take(200).collect();
            return Err(Error::Adapter(format!("`{}` failed with {status}: {tail}", self.program.display())));
        }
        (0..images.len())
            .map(|i| {
                let hm = self.read_stack(&out_dir.join(format!("{i:06}_heatmaps.pmap")), NUM_JOINTS)?;
                let paf = if self.cfg.expect_pafs {
                    Some(self.read_stack(&out_dir.join(format!("{i:06}_pafs.pmap")), NUM_PAF_CHANNELS)?)
                } else {
                    None
                };
                Ok((hm, paf))
            })
            .collect()
    }

    fn read_stack(&self, path: &Path, channels: usize) -> Result<MapStack> {
        let p = read_payload(path).map_err(|e| Error::Adapter(e.to_string()))?;
        let (w, h) = self.cfg.heatmap_resolution;
        if (p.frames, p.rows, p.cols) != (channels, h, w) {
            return Err(Error::Adapter(format!(
                "{}: expected {channels}x{h}x{w} (channels x rows x cols), got {}x{}x{}",
                path.display(),
                p.frames,
                p.rows,
                p.cols
            )));
        }
        MapStack::from_vec(channels, h, w, p.data)
    }
}
