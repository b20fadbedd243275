//! Colormap registry, pressure colorization and the 3-channel image type fed
//! to the networks.

use std::io::BufWriter;
use std::path::Path;

use serde::Serialize;

use crate::colormap_data::{COPPER, HSV, JET, VIRIDIS};
use crate::error::{Error, Result};
use crate::pressure::PressureFrame;

pub const LUT_SIZE: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Colormap {
    pub name: String,
    pub lut: Vec<[f32; 3]>,
}

impl Colormap {
    pub fn new(name: impl Into<String>, lut: Vec<[f32; 3]>) -> Result<Self> {
        if lut.len() != LUT_SIZE {
            return Err(Error::invalid(format!("colormap LUT needs {LUT_SIZE} entries, got {}", lut.len())));
        }
        if lut.iter().flatten().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::invalid("colormap components must lie in [0, 1]"));
        }
        Ok(Colormap { name: name.into(), lut })
    }

    /// Built-in maps: `viridis` (default), `jet`, `hsv`, `copper`.
    pub fn by_name(name: &str) -> Result<Self> {
        let lut: &[[f32; 3]; LUT_SIZE] = match name.to_ascii_lowercase().as_str() {
            "viridis" => &VIRIDIS,
            "jet" => &JET,
            "hsv" => &HSV,
            "copper" => &COPPER,
            _ => {
                return Err(Error::invalid(format!(
                    "unknown colormap `{name}` (available: {})",
                    Self::builtin_names().join(", ")
                )))
            }
        };
        Ok(Colormap { name: name.to_ascii_lowercase(), lut: lut.to_vec() })
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["viridis", "jet", "hsv", "copper"]
    }

    pub fn viridis() -> Self {
        Self::by_name("viridis").expect("built-in")
    }

    /// Color at normalized position `v` in [0, 1], linear between entries.
    pub fn sample(&self, v: f32) -> [f32; 3] {
        let pos = v.clamp(0.0, 1.0) * (LUT_SIZE - 1) as f32;
        let i0 = (pos.floor() as usize).min(LUT_SIZE - 1);
        let i1 = (i0 + 1).min(LUT_SIZE - 1);
        let frac = pos - i0 as f32;
        let (a, b) = (self.lut[i0], self.lut[i1]);
        [0, 1, 2].map(|c| a[c] + (b[c] - a[c]) * frac)
    }
}

/// JSON fixture with every built-in LUT, shared with the annotation UI.
pub fn colormap_fixture_json() -> String {
    let maps: Vec<Colormap> = Colormap::builtin_names().iter().map(|n| Colormap::by_name(n).unwrap()).collect();
    let mut s = serde_json::to_string_pretty(&maps).expect("colormaps serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ValueRange {
    /// Colorized input, [0, 1].
    Unit,
    /// Network range, [-1, 1].
    Signed,
}

impl ValueRange {
    pub fn bounds(self) -> (f32, f32) {
        match self {
            ValueRange::Unit => (0.0, 1.0),
            ValueRange::Signed => (-1.0, 1.0),
        }
    }
}

/// Three planes of `height × width`, channel-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorImage {
    pub width: usize,
    pub height: usize,
    pub data: Vec<f32>,
    pub source_grid_dims: (usize, usize),
    pub range: ValueRange,
}

impl ColorImage {
    pub fn from_planes(
        width: usize,
        height: usize,
        data: Vec<f32>,
        source_grid_dims: (usize, usize),
        range: ValueRange,
    ) -> Result<Self> {
        if data.len() != 3 * width * height {
            return Err(Error::invalid(format!(
                "color image {width}x{height} needs {} values, got {}",
                3 * width * height,
                data.len()
            )));
        }
        let (lo, hi) = range.bounds();
        if data.iter().any(|v| !(lo..=hi).contains(v)) {
            return Err(Error::invalid(format!("color image values must lie in [{lo}, {hi}]")));
        }
        Ok(ColorImage { width, height, data, source_grid_dims, range })
    }

    pub fn plane(&self, c: usize) -> &[f32] {
        let n = self.width * self.height;
        &self.data[c * n..(c + 1) * n]
    }

    /// Maps a [0, 1] image to [-1, 1] via `v -> 2v - 1`; signed images pass
    /// through unchanged.
    pub fn to_signed(&self) -> ColorImage {
        match self.range {
            ValueRange::Signed => self.clone(),
            ValueRange::Unit => ColorImage {
                data: self.data.iter().map(|v| 2.0 * v - 1.0).collect(),
                range: ValueRange::Signed,
                ..self.clone()
            },
        }
    }

    pub fn flipped_horizontally(&self) -> ColorImage {
        let w = self.width;
        let mut data = self.data.clone();
        for row in data.chunks_exact_mut(w) {
            row.reverse();
        }
        ColorImage { data, ..self.clone() }
    }

    /// Bilinear resize to `(width, height)` with cell centers aligned.
    pub fn resized(&self, width: usize, height: usize) -> ColorImage {
        if width == self.width && height == self.height {
            return self.clone();
        }
        let xs = sample_positions(self.width, width);
        let ys = sample_positions(self.height, height);
        let mut data = Vec::with_capacity(3 * width * height);
        for c in 0..3 {
            let src = self.plane(c);
            for &(y0, y1, fy) in &ys {
                for &(x0, x1, fx) in &xs {
                    let top = src[y0 * self.width + x0] * (1.0 - fx) + src[y0 * self.width + x1] * fx;
                    let bot = src[y1 * self.width + x0] * (1.0 - fx) + src[y1 * self.width + x1] * fx;
                    data.push(top * (1.0 - fy) + bot * fy);
                }
            }
        }
        ColorImage { width, height, data, ..self.clone() }
    }

    /// 8-bit RGB encoding of the image, mapping its declared range onto 0..=255.
    pub fn to_rgb8(&self) -> Vec<u8> {
        let (lo, hi) = self.range.bounds();
        let n = self.width * self.height;
        let mut out = Vec::with_capacity(3 * n);
        for i in 0..n {
            for c in 0..3 {
                let v = ((self.data[c * n + i] - lo) / (hi - lo)).clamp(0.0, 1.0);
                out.push((v * 255.0).round() as u8);
            }
        }
        out
    }

    pub fn write_png(&self, path: &Path) -> Result<()> {
        write_rgb_png(path, self.width, self.height, &self.to_rgb8())
    }
}

fn sample_positions(from: usize, to: usize) -> Vec<(usize, usize, f32)> {
    (0..to)
        .map(|o| {
            let s = (((o as f64 + 0.5) * from as f64 / to as f64) - 0.5).clamp(0.0, (from - 1) as f64);
            let i0 = s.floor() as usize;
            let i1 = (i0 + 1).min(from - 1);
            (i0, i1, (s - i0 as f64) as f32)
        })
        .collect()
}

pub(crate) fn write_rgb_png(path: &Path, width: usize, height: usize, rgb: &[u8]) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut enc = png::Encoder::new(BufWriter::new(file), width as u32, height as u32);
    enc.set_color(png::ColorType::Rgb);
    enc.set_depth(png::BitDepth::Eight);
    let to_err = |e: png::EncodingError| Error::io(path, std::io::Error::other(e.to_string()));
    let mut writer = enc.write_header().map_err(to_err)?;
    writer.write_image_data(rgb).map_err(to_err)?;
    writer.finish().map_err(to_err)
}

/// Clamps each cell to `[0, p_max]`, normalizes and looks the value up in
/// the LUT. The image has the grid's dims (width = cols).
pub fn apply_colormap(frame: &PressureFrame, cmap: &Colormap, p_max: f32) -> Result<ColorImage> {
    if !(p_max > 0.0) || !p_max.is_finite() {
        return Err(Error::invalid(format!("p_max must be positive, got {p_max}")));
    }
    let n = frame.rows * frame.cols;
    let mut data = vec![0f32; 3 * n];
    for (i, &p) in frame.values.iter().enumerate() {
        let rgb = cmap.sample(p.clamp(0.0, p_max) / p_max);
        for c in 0..3 {
            data[c * n + i] = rgb[c];
        }
    }
    Ok(ColorImage {
        width: frame.cols,
        height: frame.rows,
        data,
        source_grid_dims: (frame.rows, frame.cols),
        range: ValueRange::Unit,
    })
}
