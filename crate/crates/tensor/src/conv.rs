use crate::Scalar;

/// Zero padding applied to each spatial border.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Padding {
    pub top: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
}

impl Padding {
    pub fn same(p: usize) -> Self {
        Self { top: p, bottom: p, left: p, right: p }
    }

    /// "Same"-size padding for a stride-1 kernel, placing the extra row and
    /// column of an even kernel at the bottom/right.
    pub fn same_for_kernel(kh: usize, kw: usize, dy: usize, dx: usize) -> Self {
        let ty = dy * (kh - 1);
        let tx = dx * (kw - 1);
        Self { top: ty / 2, bottom: ty - ty / 2, left: tx / 2, right: tx - tx / 2 }
    }

    pub fn is_symmetric_horizontally(&self) -> bool {
        self.left == self.right
    }
}

/// Stride, padding and dilation of a 2-D convolution. Pairs are `(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvGeometry {
    pub stride: (usize, usize),
    pub padding: Padding,
    pub dilation: (usize, usize),
}

impl Default for ConvGeometry {
    fn default() -> Self {
        Self { stride: (1, 1), padding: Padding::default(), dilation: (1, 1) }
    }
}

impl ConvGeometry {
    pub fn output_size(&self, h: usize, w: usize, kh: usize, kw: usize) -> (usize, usize) {
        let eff_h = self.dilation.0 * (kh - 1) + 1;
        let eff_w = self.dilation.1 * (kw - 1) + 1;
        let ph = h + self.padding.top + self.padding.bottom;
        let pw = w + self.padding.left + self.padding.right;
        assert!(
            ph >= eff_h && pw >= eff_w,
            "kernel {kh}x{kw} (dilation {:?}) larger than padded input {ph}x{pw}",
            self.dilation
        );
        ((ph - eff_h) / self.stride.0 + 1, (pw - eff_w) / self.stride.1 + 1)
    }

    /// True when the convolution is a plain per-pixel channel mix.
    pub(crate) fn is_pointwise(&self, kh: usize, kw: usize) -> bool {
        kh == 1 && kw == 1 && self.stride == (1, 1) && self.padding == Padding::default()
    }
}

pub(crate) struct ConvShape {
    pub cin: usize,
    pub h: usize,
    pub w: usize,
    pub kh: usize,
    pub kw: usize,
    pub oh: usize,
    pub ow: usize,
}

/// Unfold one `[Cin, H, W]` image into a `[Cin*kh*kw, oh*ow]` matrix.
pub(crate) fn im2col<T: Scalar>(x: &[T], s: &ConvShape, g: &ConvGeometry, cols: &mut [T]) {
    let opix = s.oh * s.ow;
    debug_assert_eq!(cols.len(), s.cin * s.kh * s.kw * opix);
    let (sy, sx) = g.stride;
    let (dy, dx) = g.dilation;
    for ci in 0..s.cin {
        let plane = &x[ci * s.h * s.w..(ci + 1) * s.h * s.w];
        for ky in 0..s.kh {
            for kx in 0..s.kw {
                let row = (ci * s.kh + ky) * s.kw + kx;
                let dst = &mut cols[row * opix..(row + 1) * opix];
                let x_off = (kx * dx) as isize - g.padding.left as isize;
                for oy in 0..s.oh {
                    let iy = (oy * sy + ky * dy) as isize - g.padding.top as isize;
                    let out_row = &mut dst[oy * s.ow..(oy + 1) * s.ow];
                    if iy < 0 || iy >= s.h as isize {
                        out_row.fill(T::zero());
                        continue;
                    }
                    let src = &plane[iy as usize * s.w..(iy as usize + 1) * s.w];
                    if sx == 1 {
                        // contiguous run with zero fill at both ends
                        let lo = (-x_off).max(0) as usize;
                        let hi = ((s.w as isize - x_off).max(0) as usize).min(s.ow);
                        if lo >= hi {
                            out_row.fill(T::zero());
                            continue;
                        }
                        out_row[..lo].fill(T::zero());
                        let start = (lo as isize + x_off) as usize;
                        out_row[lo..hi].copy_from_slice(&src[start..start + (hi - lo)]);
                        out_row[hi..].fill(T::zero());
                    } else {
                        for (ox, o) in out_row.iter_mut().enumerate() {
                            let ix = (ox * sx) as isize + x_off;
                            *o = if ix < 0 || ix >= s.w as isize { T::zero() } else { src[ix as usize] };
                        }
                    }
                }
            }
        }
    }
}

/// Adjoint of [`im2col`]: scatter-add columns back into a `[Cin, H, W]` image.
pub(crate) fn col2im<T: Scalar>(cols: &[T], s: &ConvShape, g: &ConvGeometry, dx_img: &mut [T]) {
    let opix = s.oh * s.ow;
    let (sy, sx) = g.stride;
    let (dy, dxl) = g.dilation;
    for ci in 0..s.cin {
        let plane = &mut dx_img[ci * s.h * s.w..(ci + 1) * s.h * s.w];
        for ky in 0..s.kh {
            for kx in 0..s.kw {
                let row = (ci * s.kh + ky) * s.kw + kx;
                let src = &cols[row * opix..(row + 1) * opix];
                let x_off = (kx * dxl) as isize - g.padding.left as isize;
                for oy in 0..s.oh {
                    let iy = (oy * sy + ky * dy) as isize - g.padding.top as isize;
                    if iy < 0 || iy >= s.h as isize {
                        continue;
                    }
                    let dst = &mut plane[iy as usize * s.w..(iy as usize + 1) * s.w];
                    let in_row = &src[oy * s.ow..(oy + 1) * s.ow];
                    for (ox, &v) in in_row.iter().enumerate() {
                        let ix = (ox * sx) as isize + x_off;
                        if ix >= 0 && ix < s.w as isize {
                            dst[ix as usize] += v;
                        }
                    }
                }
            }
        }
    }
}
