//! PNG panels of AP against normalized distance threshold: one image per
//! joint with one curve per report, plus a combined grid of all joints.

use std::path::{Path, PathBuf};

use crate::colormap::write_rgb_png;
use crate::error::{Error, Result};
use crate::evaluation::EvaluationReport;
use crate::skeleton::{JointName, NUM_JOINTS};

pub const PANEL_WIDTH: usize = 320;
pub const PANEL_HEIGHT: usize = 240;
const MARGIN_LEFT: usize = 34;
const MARGIN_RIGHT: usize = 10;
const MARGIN_TOP: usize = 10;
const MARGIN_BOTTOM: usize = 24;
const GRID_COLUMNS: usize = 4;

/// Curve colors, cycled per report.
pub const PALETTE: [[u8; 3]; 6] =
    [[31, 119, 180], [214, 39, 40], [44, 160, 44], [255, 127, 14], [148, 103, 189], [23, 190, 207]];

const WHITE: [u8; 3] = [255, 255, 255];
const AXIS: [u8; 3] = [40, 40, 40];
const GRID: [u8; 3] = [220, 220, 220];

/// 3x5 bitmaps for tick labels; bit 2 is the leftmost column.
fn glyph(c: char) -> Option<[u8; 5]> {
    Some(match c {
        '0' => [7, 5, 5, 5, 7],
        '1' => [2, 6, 2, 2, 7],
        '2' => [7, 1, 7, 4, 7],
        '3' => [7, 1, 7, 1, 7],
        '4' => [5, 5, 7, 1, 1],
        '5' => [7, 4, 7, 1, 7],
        '6' => [7, 4, 7, 5, 7],
        '7' => [7, 1, 1, 1, 1],
        '8' => [7, 5, 7, 5, 7],
        '9' => [7, 5, 7, 1, 7],
        '.' => [0, 0, 0, 0, 2],
        _ => return None,
    })
}

/// An RGB raster.
#[derive(Debug, Clone, PartialEq)]
pub struct Canvas {
    pub width: usize,
    pub height: usize,
    pub rgb: Vec<u8>,
}

impl Canvas {
    pub fn new(width: usize, height: usize) -> Self {
        Canvas { width, height, rgb: WHITE.repeat(width * height) }
    }

    pub fn pixel(&self, x: usize, y: usize) -> [u8; 3] {
        let i = 3 * (y * self.width + x);
        [self.rgb[i], self.rgb[i + 1], self.rgb[i + 2]]
    }

    fn set(&mut self, x: i64, y: i64, c: [u8; 3]) {
        if x >= 0 && y >= 0 && (x as usize) < self.width && (y as usize) < self.height {
            let i = 3 * (y as usize * self.width + x as usize);
            self.rgb[i..i + 3].copy_from_slice(&c);
        }
    }

    fn line(&mut self, (x0, y0): (i64, i64), (x1, y1): (i64, i64), c: [u8; 3], thick: bool) {
        let (dx, dy) = ((x1 - x0).abs(), -(y1 - y0).abs());
        let (sx, sy) = (if x0 < x1 { 1 } else { -1 }, if y0 < y1 { 1 } else { -1 });
        let (mut x, mut y, mut err) = (x0, y0, dx + dy);
        loop {
            self.set(x, y, c);
            if thick {
                self.set(x + 1, y, c);
                self.set(x, y + 1, c);
            }
            if x == x1 && y == y1 {
                break;
            }
            let e2 = 2 * err;
            if e2 >= dy {
                err += dy;
                x += sx;
            }
            if e2 <= dx {
                err += dx;
                y += sy;
            }
        }
    }

    fn text(&mut self, x: i64, y: i64, s: &str, c: [u8; 3]) {
        let mut cx = x;
        for ch in s.chars() {
            if let Some(rows) = glyph(ch) {
                for (r, bits) in rows.iter().enumerate() {
                    for b in 0..3 {
                        if bits & (4 >> b) != 0 {
                            self.set(cx + b, y + r as i64, c);
                        }
                    }
                }
            }
            cx += 4;
        }
    }

    fn blit(&mut self, other: &Canvas, ox: usize, oy: usize) {
        for y in 0..other.height {
            let src = &other.rgb[3 * y * other.width..3 * (y + 1) * other.width];
            let start = 3 * ((oy + y) * self.width + ox);
            self.rgb[start..start + src.len()].copy_from_slice(src);
        }
    }

    pub fn write_png(&self, path: &Path) -> Result<()> {
        write_rgb_png(path, self.width, self.height, &self.rgb)
    }
}

/// One curve: AP per threshold, `None` where undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub thresholds: Vec<f64>,
    pub values: Vec<Option<f64>>,
    pub color: [u8; 3],
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else if v == 1.0 {
        "1".into()
    } else {
        format!("{v:.2}").trim_start_matches('0').trim_end_matches('0').to_string()
    }
}

/// Draws AP (y, 0 to 1) against threshold (x, 0 to `x_max`).
pub fn render_panel(curves: &[Curve], x_max: f64) -> Result<Canvas> {
    if !(x_max > 0.0) || !x_max.is_finite() {
        return Err(Error::invalid(format!("plot x range must be positive, got {x_max}")));
    }
    let mut cv = Canvas::new(PANEL_WIDTH, PANEL_HEIGHT);
    let (x0, y0) = (MARGIN_LEFT as i64, (PANEL_HEIGHT - MARGIN_BOTTOM) as i64);
    let (pw, ph) =
        ((PANEL_WIDTH - MARGIN_LEFT - MARGIN_RIGHT) as f64, (PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) as f64);
    let to_px = |t: f64, ap: f64| (x0 + (t / x_max * pw).round() as i64, y0 - (ap.clamp(0.0, 1.0) * ph).round() as i64);
    for i in 0..=5 {
        let ap = i as f64 / 5.0;
        let (_, y) = to_px(0.0, ap);
        cv.line((x0, y), (x0 + pw as i64, y), GRID, false);
        cv.line((x0 - 3, y), (x0, y), AXIS, false);
        cv.text(x0 - 6 - 4 * tick_label(ap).len() as i64, y - 2, &tick_label(ap), AXIS);
    }
    for i in 0..=5 {
        let t = x_max * i as f64 / 5.0;
        let (x, _) = to_px(t, 0.0);
        cv.line((x, y0), (x, y0 - ph as i64), GRID, false);
        cv.line((x, y0), (x, y0 + 3), AXIS, false);
        let label = tick_label((t * 100.0).round() / 100.0);
        cv.text(x - 2 * label.len() as i64, y0 + 6, &label, AXIS);
    }
    cv.line((x0, y0), (x0 + pw as i64, y0), AXIS, false);
    cv.line((x0, y0), (x0, y0 - ph as i64), AXIS, false);
    for c in curves {
        if c.thresholds.len() != c.values.len() {
            return Err(Error::invalid("curve thresholds and values differ in length"));
        }
        let mut prev: Option<(i64, i64)> = None;
        for (&t, v) in c.thresholds.iter().zip(&c.values) {
            match v {
                Some(ap) if t <= x_max => {
                    let p = to_px(t, *ap);
                    cv.line(prev.unwrap_or(p), p, c.color, true);
                    prev = Some(p);
                }
                _ => prev = None,
            }
        }
    }
    Ok(cv)
}

fn curves_for(reports: &[EvaluationReport], joint: JointName) -> Vec<Curve> {
    reports
        .iter()
        .enumerate()
        .map(|(i, r)| Curve {
            thresholds: r.thresholds.clone(),
            values: r.joint(joint).ap.clone(),
            color: PALETTE[i % PALETTE.len()],
        })
        .collect()
}

/// Writes `ap_<joint>.png` for every joint and `ap_combined.png` (all
/// joint panels in a grid, head first). Returns the written paths.
pub fn write_ap_plots(reports: &[EvaluationReport], dir: &Path) -> Result<Vec<PathBuf>> {
    let first = reports.first().ok_or_else(|| Error::invalid("plot needs at least one report"))?;
    let x_max = first.thresholds.iter().cloned().fold(0.0, f64::max);
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let rows = NUM_JOINTS.div_ceil(GRID_COLUMNS);
    let mut combined = Canvas::new(GRID_COLUMNS * PANEL_WIDTH, rows * PANEL_HEIGHT);
    let mut paths = Vec::with_capacity(NUM_JOINTS + 1);
    for (k, joint) in JointName::ALL.into_iter().enumerate() {
        let panel = render_panel(&curves_for(reports, joint), x_max)?;
        let path = dir.join(format!("ap_{}.png", joint.name()));
        panel.write_png(&path)?;
        paths.push(path);
        combined.blit(&panel, (k % GRID_COLUMNS) * PANEL_WIDTH, (k / GRID_COLUMNS) * PANEL_HEIGHT);
    }
    let path = dir.join("ap_combined.png");
    combined.write_png(&path)?;
    paths.push(path);
    Ok(paths)
}
