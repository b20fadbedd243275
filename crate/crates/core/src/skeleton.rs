//! The 14-joint skeleton, its limb graph, keypoint sets and ground-truth
//! target rendering (Gaussian heatmaps and part affinity fields).
//!
//! Coordinates are in grid cells with cell centers at integer positions and
//! the origin at the top-left cell.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const NUM_JOINTS: usize = 14;
pub const NUM_LIMBS: usize = 14;
pub const NUM_PAF_CHANNELS: usize = 2 * NUM_LIMBS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointName {
    Head,
    Neck,
    LeftShoulder,
    RightShoulder,
    LeftElbow,
    RightElbow,
    LeftWrist,
    RightWrist,
    LeftHip,
    RightHip,
    LeftKnee,
    RightKnee,
    LeftAnkle,
    RightAnkle,
}

impl JointName {
    /// Canonical order; also the heatmap channel order.
    pub const ALL: [JointName; NUM_JOINTS] = [
        JointName::Head,
        JointName::Neck,
        JointName::LeftShoulder,
        JointName::RightShoulder,
        JointName::LeftElbow,
        JointName::RightElbow,
        JointName::LeftWrist,
        JointName::RightWrist,
        JointName::LeftHip,
        JointName::RightHip,
        JointName::LeftKnee,
        JointName::RightKnee,
        JointName::LeftAnkle,
        JointName::RightAnkle,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<JointName> {
        Self::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            JointName::Head => "head",
            JointName::Neck => "neck",
            JointName::LeftShoulder => "left_shoulder",
            JointName::RightShoulder => "right_shoulder",
            JointName::LeftElbow => "left_elbow",
            JointName::RightElbow => "right_elbow",
            JointName::LeftWrist => "left_wrist",
            JointName::RightWrist => "right_wrist",
            JointName::LeftHip => "left_hip",
            JointName::RightHip => "right_hip",
            JointName::LeftKnee => "left_knee",
            JointName::RightKnee => "right_knee",
            JointName::LeftAnkle => "left_ankle",
            JointName::RightAnkle => "right_ankle",
        }
    }

    pub fn from_name(name: &str) -> Option<JointName> {
        Self::ALL.iter().copied().find(|j| j.name() == name)
    }

    /// Short column label used in report tables (the neck has none there).
    pub fn abbrev(self) -> &'static str {
        match self {
            JointName::Head => "H",
            JointName::Neck => "N",
            JointName::LeftShoulder => "LS",
            JointName::RightShoulder => "RS",
            JointName::LeftElbow => "LE",
            JointName::RightElbow => "RE",
            JointName::LeftWrist => "LW",
            JointName::RightWrist => "RW",
            JointName::LeftHip => "LH",
            JointName::RightHip => "RH",
            JointName::LeftKnee => "LK",
            JointName::RightKnee => "RK",
            JointName::LeftAnkle => "LA",
            JointName::RightAnkle => "RA",
        }
    }

    /// The joint with left and right exchanged.
    pub fn mirror(self) -> JointName {
        use JointName::*;
        match self {
            Head => Head,
            Neck => Neck,
            LeftShoulder => RightShoulder,
            RightShoulder => LeftShoulder,
            LeftElbow => RightElbow,
            RightElbow => LeftElbow,
            LeftWrist => RightWrist,
            RightWrist => LeftWrist,
            LeftHip => RightHip,
            RightHip => LeftHip,
            LeftKnee => RightKnee,
            RightKnee => LeftKnee,
            LeftAnkle => RightAnkle,
            RightAnkle => LeftAnkle,
        }
    }
}

impl fmt::Display for JointName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Keypoint {
    pub x: f64,
    pub y: f64,
    pub visible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
}

impl Keypoint {
    pub fn visible(x: f64, y: f64) -> Self {
        Keypoint { x, y, visible: true, score: None }
    }

    pub fn hidden() -> Self {
        Keypoint { x: 0.0, y: 0.0, visible: false, score: None }
    }

    pub fn distance(&self, other: &Keypoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Fourteen joints in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeypointSet {
    pub joints: [Keypoint; NUM_JOINTS],
}

impl KeypointSet {
    pub fn new(joints: [Keypoint; NUM_JOINTS]) -> Result<Self> {
        let set = KeypointSet { joints };
        set.validate()?;
        Ok(set)
    }

    pub fn validate(&self) -> Result<()> {
        for (j, kp) in JointName::ALL.iter().zip(&self.joints) {
            if kp.visible && !(kp.x.is_finite() && kp.y.is_finite()) {
                return Err(Error::invalid(format!("joint {j} has non-finite coordinates")));
            }
            if let Some(s) = kp.score {
                if !s.is_finite() {
                    return Err(Error::invalid(format!("joint {j} has non-finite score")));
                }
            }
        }
        Ok(())
    }

    pub fn visibility(&self) -> [bool; NUM_JOINTS] {
        self.joints.map(|k| k.visible)
    }

    /// Mirrors about the vertical center line of a grid `width` cells wide
    /// and swaps left/right labels.
    pub fn mirrored(&self, width: usize) -> KeypointSet {
        let mut out = *self;
        let axis = width as f64 - 1.0;
        for j in JointName::ALL {
            let src = self[j];
            out[j.mirror()] = Keypoint { x: axis - src.x, ..src };
        }
        out
    }

    /// Rescales coordinates between two resolutions, keeping cell centers
    /// aligned: `x' = (x + 0.5) * to / from - 0.5`.
    pub fn rescaled(&self, from: (usize, usize), to: (usize, usize)) -> KeypointSet {
        let mut out = *self;
        for kp in out.joints.iter_mut() {
            kp.x = rescale_coord(kp.x, from.0, to.0);
            kp.y = rescale_coord(kp.y, from.1, to.1);
        }
        out
    }
}

/// Cell-center preserving coordinate map between `from` and `to` cells.
pub fn rescale_coord(v: f64, from: usize, to: usize) -> f64 {
    (v + 0.5) * to as f64 / from as f64 - 0.5
}

impl Index<JointName> for KeypointSet {
    type Output = Keypoint;
    fn index(&self, j: JointName) -> &Keypoint {
        &self.joints[j.index()]
    }
}

impl IndexMut<JointName> for KeypointSet {
    fn index_mut(&mut self, j: JointName) -> &mut Keypoint {
        &mut self.joints[j.index()]
    }
}

/// Directed limb edges; edge `j` owns PAF channels `2j` (x) and `2j+1` (y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimbGraph {
    edges: Vec<(JointName, JointName)>,
}

impl LimbGraph {
    pub fn canonical() -> Self {
        use JointName::*;
        LimbGraph {
            edges: vec![
                (Head, Neck),
                (Neck, LeftShoulder),
                (LeftShoulder, LeftElbow),
                (LeftElbow, LeftWrist),
                (Neck, RightShoulder),
                (RightShoulder, RightElbow),
                (RightElbow, RightWrist),
                (Neck, LeftHip),
                (LeftHip, LeftKnee),
                (LeftKnee, LeftAnkle),
                (Neck, RightHip),
                (RightHip, RightKnee),
                (RightKnee, RightAnkle),
                (LeftHip, RightHip),
            ],
        }
    }

    pub fn new(edges: Vec<(JointName, JointName)>) -> Result<Self> {
        if edges.len() != NUM_LIMBS {
            return Err(Error::invalid(format!("limb graph needs {NUM_LIMBS} edges, got {}", edges.len())));
        }
        for j in JointName::ALL {
            if !edges.iter().any(|&(a, b)| a == j || b == j) {
                return Err(Error::invalid(format!("joint {j} appears in no limb edge")));
            }
        }
        Ok(LimbGraph { edges })
    }

    pub fn edges(&self) -> &[(JointName, JointName)] {
        &self.edges
    }
}

impl Default for LimbGraph {
    fn default() -> Self {
        Self::canonical()
    }
}

/// Channel permutation and sign rules describing how heatmap and PAF stacks
/// transform under a horizontal flip of the input.
///
/// Flipping edge `a→b` lands on edge `mirror(a)→mirror(b)` with the x
/// component negated. If the graph stores that limb reversed
/// (`mirror(b)→mirror(a)`, e.g. the pelvis edge), the y component is negated
/// instead.
#[derive(Debug, Clone, PartialEq)]
pub struct FlipChannelMap {
    pub heatmap_perm: [usize; NUM_JOINTS],
    pub paf_perm: [usize; NUM_PAF_CHANNELS],
    pub paf_sign: [f32; NUM_PAF_CHANNELS],
}

impl FlipChannelMap {
    pub fn new(graph: &LimbGraph) -> Result<Self> {
        let heatmap_perm = JointName::ALL.map(|j| j.mirror().index());
        let mut paf_perm = [0usize; NUM_PAF_CHANNELS];
        let mut paf_sign = [0f32; NUM_PAF_CHANNELS];
        let edges = graph.edges();
        for (e, &(a, b)) in edges.iter().enumerate() {
            let (ma, mb) = (a.mirror(), b.mirror());
            let (target, sx, sy) = if let Some(t) = edges.iter().position(|&x| x == (ma, mb)) {
                (t, -1.0, 1.0)
            } else if let Some(t) = edges.iter().position(|&x| x == (mb, ma)) {
                (t, 1.0, -1.0)
            } else {
                return Err(Error::invalid(format!("limb {a}->{b} has no mirror image in the graph")));
            };
            paf_perm[2 * e] = 2 * target;
            paf_perm[2 * e + 1] = 2 * target + 1;
            paf_sign[2 * e] = sx;
            paf_sign[2 * e + 1] = sy;
        }
        let map = FlipChannelMap { heatmap_perm, paf_perm, paf_sign };
        if !map.is_involution() {
            return Err(Error::invalid("limb graph yields a flip map that is not an involution"));
        }
        Ok(map)
    }

    pub fn is_involution(&self) -> bool {
        let hm = (0..NUM_JOINTS).all(|c| self.heatmap_perm[self.heatmap_perm[c]] == c);
        let paf = (0..NUM_PAF_CHANNELS)
            .all(|c| self.paf_perm[self.paf_perm[c]] == c && self.paf_sign[c] * self.paf_sign[self.paf_perm[c]] == 1.0);
        hm && paf
    }
}

/// A `channels × height × width` stack of maps, channel-major.
#[derive(Debug, Clone, PartialEq)]
pub struct MapStack {
    pub channels: usize,
    pub height: usize,
    pub width: usize,
    pub data: Vec<f32>,
}

/// Per-joint belief maps, 14 channels in canonical joint order.
pub type HeatmapStack = MapStack;
/// Per-limb vector fields, 28 channels (x, y per edge).
pub type PafStack = MapStack;

impl MapStack {
    pub fn zeros(channels: usize, height: usize, width: usize) -> Self {
        MapStack { channels, height, width, data: vec![0.0; channels * height * width] }
    }

    pub fn from_vec(channels: usize, height: usize, width: usize, data: Vec<f32>) -> Result<Self> {
        if data.len() != channels * height * width {
            return Err(Error::invalid(format!(
                "map stack {channels}x{height}x{width} needs {} values, got {}",
                channels * height * width,
                data.len()
            )));
        }
        Ok(MapStack { channels, height, width, data })
    }

    pub fn plane_len(&self) -> usize {
        self.height * self.width
    }

    pub fn channel(&self, c: usize) -> &[f32] {
        let n = self.plane_len();
        &self.data[c * n..(c + 1) * n]
    }

    pub fn channel_mut(&mut self, c: usize) -> &mut [f32] {
        let n = self.plane_len();
        &mut self.data[c * n..(c + 1) * n]
    }

    pub fn same_dims(&self, other: &MapStack) -> bool {
        self.channels == other.channels && self.height == other.height && self.width == other.width
    }

    /// Mirrors every channel horizontally, then moves channel `c` to
    /// `perm[c]` multiplied by `sign[c]`.
    pub fn flipped(&self, perm: &[usize], sign: Option<&[f32]>) -> MapStack {
        assert_eq!(perm.len(), self.channels, "flip permutation length");
        let mut out = MapStack::zeros(self.channels, self.height, self.width);
        let w = self.width;
        for c in 0..self.channels {
            let s = sign.map_or(1.0, |s| s[c]);
            let src = self.channel(c);
            let dst = out.channel_mut(perm[c]);
            for (src_row, dst_row) in src.chunks_exact(w).zip(dst.chunks_exact_mut(w)) {
                for x in 0..w {
                    dst_row[w - 1 - x] = s * src_row[x];
                }
            }
        }
        out
    }
}

/// Gaussian belief maps, zero for invisible joints. `dims` is `(w, h)` and
/// keypoints must already be in that map's coordinates.
pub fn render_heatmaps(kps: &KeypointSet, dims: (usize, usize), sigma: f64) -> Result<HeatmapStack> {
    let (w, h) = dims;
    if w == 0 || h == 0 {
        return Err(Error::invalid(format!("heatmap dims must be positive, got {w}x{h}")));
    }
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::invalid(format!("heatmap sigma must be positive, got {sigma}")));
    }
    let mut stack = MapStack::zeros(NUM_JOINTS, h, w);
    let inv = 1.0 / (2.0 * sigma * sigma);
    for (k, kp) in kps.joints.iter().enumerate() {
        if !kp.visible {
            continue;
        }
        // Separable: exp(-(dx²+dy²)/2σ²) = gx(x) * gy(y).
        let gx: Vec<f64> = (0..w).map(|x| (-(x as f64 - kp.x).powi(2) * inv).exp()).collect();
        let gy: Vec<f64> = (0..h).map(|y| (-(y as f64 - kp.y).powi(2) * inv).exp()).collect();
        let plane = stack.channel_mut(k);
        for (y, row) in plane.chunks_exact_mut(w).enumerate() {
            for (x, v) in row.iter_mut().enumerate() {
                *v = (gy[y] * gx[x]) as f32;
            }
        }
    }
    Ok(stack)
}

/// Unit-vector limb fields. A pixel belongs to an edge's band when its
/// distance to the segment is at most `limb_width`.
pub fn render_pafs(
    kps: &KeypointSet,
    graph: &LimbGraph,
    dims: (usize, usize),
    limb_width: f64,
) -> Result<(PafStack, [bool; NUM_PAF_CHANNELS])> {
    let (w, h) = dims;
    if w == 0 || h == 0 {
        return Err(Error::invalid(format!("PAF dims must be positive, got {w}x{h}")));
    }
    if !(limb_width > 0.0) || !limb_width.is_finite() {
        return Err(Error::invalid(format!("limb width must be positive, got {limb_width}")));
    }
    let mut stack = MapStack::zeros(NUM_PAF_CHANNELS, h, w);
    let mut vis = [false; NUM_PAF_CHANNELS];
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        let (pa, pb) = (kps[a], kps[b]);
        if !(pa.visible && pb.visible) {
            continue;
        }
        vis[2 * e] = true;
        vis[2 * e + 1] = true;
        let (dx, dy) = (pb.x - pa.x, pb.y - pa.y);
        let len = dx.hypot(dy);
        if len == 0.0 {
            continue;
        }
        let (ux, uy) = (dx / len, dy / len);
        let n = w * h;
        for y in 0..h {
            for x in 0..w {
                if point_segment_distance(x as f64, y as f64, &pa, &pb) <= limb_width {
                    stack.data[2 * e * n + y * w + x] = ux as f32;
                    stack.data[(2 * e + 1) * n + y * w + x] = uy as f32;
                }
            }
        }
    }
    Ok((stack, vis))
}

pub(crate) fn point_segment_distance(px: f64, py: f64, a: &Keypoint, b: &Keypoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((px - a.x) * dx + (py - a.y) * dy) / len2).clamp(0.0, 1.0) };
    (px - (a.x + t * dx)).hypot(py - (a.y + t * dy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kps_all(x: f64, y: f64) -> KeypointSet {
        KeypointSet { joints: [Keypoint::visible(x, y); NUM_JOINTS] }
    }

    #[test]
    fn names_round_trip_and_mirror_is_involution() {
        for (i, j) in JointName::ALL.iter().enumerate() {
            assert_eq!(j.index(), i);
            assert_eq!(JointName::from_name(j.name()), Some(*j));
            assert_eq!(j.mirror().mirror(), *j);
        }
        assert_eq!(serde_json::to_string(&JointName::LeftShoulder).unwrap(), "\"left_shoulder\"");
    }

    #[test]
    fn canonical_graph_is_valid() {
        let g = LimbGraph::canonical();
        assert!(LimbGraph::new(g.edges().to_vec()).is_ok());
        assert!(LimbGraph::new(g.edges()[..13].to_vec()).is_err());
    }

    #[test]
    fn flip_map_pelvis_edge_negates_y() {
        let m = FlipChannelMap::new(&LimbGraph::canonical()).unwrap();
        assert!(m.is_involution());
        assert_eq!(m.paf_perm[26], 26);
        assert_eq!((m.paf_sign[26], m.paf_sign[27]), (1.0, -1.0));
        // neck->left_shoulder (edge 1) maps onto neck->right_shoulder (edge 4).
        assert_eq!(m.paf_perm[2], 8);
        assert_eq!((m.paf_sign[2], m.paf_sign[3]), (-1.0, 1.0));
        assert_eq!(m.heatmap_perm[JointName::LeftWrist.index()], JointName::RightWrist.index());
    }

    #[test]
    fn heatmap_peak_and_neighbour() {
        let mut k = kps_all(3.0, 4.0);
        k[JointName::Neck].visible = false;
        let hm = render_heatmaps(&k, (8, 8), 1.0).unwrap();
        let head = hm.channel(0);
        assert_eq!(head[4 * 8 + 3], 1.0);
        assert!((head[5 * 8 + 3] as f64 - (-0.5f64).exp()).abs() < 1e-7);
        assert_eq!(hm.channel(1).iter().sum::<f32>(), 0.0);
        assert!(render_heatmaps(&k, (8, 8), 0.0).is_err());
        assert!(render_heatmaps(&k, (0, 8), 1.0).is_err());
    }

    #[test]
    fn paf_vectors() {
        let mut k = kps_all(0.0, 0.0);
        k[JointName::Neck] = Keypoint::visible(3.0, 4.0);
        k[JointName::LeftShoulder] = Keypoint::visible(7.0, 4.0);
        k[JointName::LeftElbow].visible = false;
        let (paf, vis) = render_pafs(&k, &LimbGraph::canonical(), (10, 10), 1.0).unwrap();
        // Edge 0: head (0,0) -> neck (3,4): unit vector (0.6, 0.8).
        assert!((paf.channel(0)[0] - 0.6).abs() < 1e-7 && (paf.channel(1)[0] - 0.8).abs() < 1e-7);
        // Edge 1: horizontal.
        assert_eq!((paf.channel(2)[4 * 10 + 5], paf.channel(3)[4 * 10 + 5]), (1.0, 0.0));
        // Edge 2 has an invisible endpoint.
        assert!(!vis[4] && !vis[5]);
        assert!(paf.channel(4).iter().chain(paf.channel(5)).all(|&v| v == 0.0));
        assert!(render_pafs(&k, &LimbGraph::canonical(), (10, 10), -1.0).is_err());
    }

    #[test]
    fn rescale_keeps_centres() {
        assert_eq!(rescale_coord(0.0, 32, 32), 0.0);
        assert_eq!(rescale_coord(-0.5, 32, 128), -0.5);
        assert_eq!(rescale_coord(31.5, 32, 128), 127.5);
        let k = kps_all(2.0, 7.0);
        let r = k.rescaled((32, 64), (128, 128)).rescaled((128, 128), (32, 64));
        assert!((r.joints[0].x - 2.0).abs() < 1e-12 && (r.joints[0].y - 7.0).abs() < 1e-12);
    }
}
