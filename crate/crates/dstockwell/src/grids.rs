//! Sampling domains: rectangles of R^2, the direction/offset/scale volume
//! Y^{n+1} = S^{n-1} x R x R^x, measure weights, and inner products.
//!
//! Scale axes are geometric per sign with exact log-cell widths
//! `da_k = |a_k| ln r`; the offset axis carries a trapezoid rule (halved
//! endpoint weights); angles are uniform on [0, 2pi) with full weights.

use crate::axis::UniformAxis;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Geometry of a uniformly sampled rectangle (values live separately).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridGeometry {
    pub nx: usize,
    pub ny: usize,
    pub x0: f64,
    pub y0: f64,
    pub dx: f64,
    pub dy: f64,
}

impl GridGeometry {
    /// Square grid of `n` x `n` samples with spacing `d`, centered at the origin.
    pub fn centered_square(n: usize, d: f64) -> Self {
        let half = 0.5 * d * (n - 1) as f64;
        Self { nx: n, ny: n, x0: -half, y0: -half, dx: d, dy: d }
    }

    #[inline]
    pub fn x(&self, ix: usize) -> f64 {
        self.x0 + self.dx * ix as f64
    }

    #[inline]
    pub fn y(&self, iy: usize) -> f64 {
        self.y0 + self.dy * iy as f64
    }

    #[inline]
    pub fn cell_area(&self) -> f64 {
        self.dx * self.dy
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Nyquist frequency `pi / min(dx, dy)`.
    pub fn nyquist(&self) -> f64 {
        std::f64::consts::PI / self.dx.min(self.dy)
    }

    /// Radius of the bounding circle around the sample positions.
    pub fn diameter_radius(&self) -> f64 {
        let cx = [self.x0.abs(), self.x(self.nx - 1).abs()];
        let cy = [self.y0.abs(), self.y(self.ny - 1).abs()];
        let mx = cx[0].max(cx[1]);
        let my = cy[0].max(cy[1]);
        (mx * mx + my * my).sqrt()
    }

    /// Refined geometry: same extent, spacing halved.
    pub fn refined_2x(&self) -> Self {
        Self {
            nx: self.nx * 2 - 1,
            ny: self.ny * 2 - 1,
            x0: self.x0,
            y0: self.y0,
            dx: self.dx * 0.5,
            dy: self.dy * 0.5,
        }
    }
}

/// Uniformly sampled complex field on a rectangle of R^2, row-major in `ix`:
/// `values[ix * ny + iy]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalGrid2D {
    pub geom: GridGeometry,
    pub values: Vec<Complex64>,
}

impl SignalGrid2D {
    pub fn new(geom: GridGeometry, values: Vec<Complex64>) -> Result<Self> {
        if geom.nx < 2 || geom.ny < 2 {
            return Err(Error::InvalidGrid(format!("nx, ny must be >= 2, got {} x {}", geom.nx, geom.ny)));
        }
        if !(geom.dx > 0.0 && geom.dy > 0.0) {
            return Err(Error::InvalidGrid("spacings must be positive".into()));
        }
        if values.len() != geom.len() {
            return Err(Error::InvalidGrid(format!(
                "value count {} does not match {} x {}",
                values.len(),
                geom.nx,
                geom.ny
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidGrid("non-finite sample".into()));
        }
        Ok(Self { geom, values })
    }

    pub fn zeros(geom: GridGeometry) -> Self {
        Self { geom, values: vec![Complex64::new(0.0, 0.0); geom.len()] }
    }

    pub fn from_fn<F: FnMut(f64, f64) -> Complex64>(geom: GridGeometry, mut f: F) -> Self {
        let mut values = Vec::with_capacity(geom.len());
        for ix in 0..geom.nx {
            let x = geom.x(ix);
            for iy in 0..geom.ny {
                values.push(f(x, geom.y(iy)));
            }
        }
        Self { geom, values }
    }

    #[inline]
    pub fn at(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[ix * self.geom.ny + iy]
    }

    #[inline]
    pub fn at_mut(&mut self, ix: usize, iy: usize) -> &mut Complex64 {
        &mut self.values[ix * self.geom.ny + iy]
    }

    /// L2 norm with the cell measure: sqrt(sum |f|^2 dx dy).
    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.geom.cell_area()).sqrt()
    }

    /// Relative L2 distance to `other` on the same geometry.
    pub fn rel_l2_distance(&self, other: &Self) -> f64 {
        assert_eq!(self.geom, other.geom);
        let num: f64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let den: f64 = other.values.iter().map(|v| v.norm_sqr()).sum();
        (num / den.max(1e-300)).sqrt()
    }
}

/// `sum f conj(h) dx dy` over a shared grid.
pub fn inner_product_r2(f: &SignalGrid2D, h: &SignalGrid2D) -> Result<Complex64> {
    if f.geom != h.geom {
        return Err(Error::GridMismatch("inner_product_r2 requires identical geometry".into()));
    }
    let s: Complex64 = f.values.iter().zip(&h.values).map(|(a, b)| a * b.conj()).sum();
    Ok(s * f.geom.cell_area())
}

/// Sampling of Y^{n+1}: uniform angles on [0, 2pi), a uniform offset axis,
/// and a signed geometric scale axis `a in +/-[a_min, a_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientAxes {
    pub angles: Vec<f64>,
    pub offsets: UniformAxis,
    /// Signed scales in ascending order: -a_max .. -a_min, a_min .. a_max.
    pub scales: Vec<f64>,
    /// Geometric ratio r > 1 between adjacent |a| on one sign branch.
    pub log_ratio: f64,
    /// Dimension n >= 2 entering the measure factor |a|^{n-2}.
    pub dim_n: u32,
    /// Offset step used for weights (1.0 for a degenerate single-point span).
    offset_step: f64,
}

impl CoefficientAxes {
    pub fn n_angles(&self) -> usize {
        self.angles.len()
    }

    pub fn n_offsets(&self) -> usize {
        self.offsets.count
    }

    pub fn n_scales(&self) -> usize {
        self.scales.len()
    }

    pub fn n_cells(&self) -> usize {
        self.n_angles() * self.n_offsets() * self.n_scales()
    }

    pub fn angle_weight(&self) -> f64 {
        TAU / self.n_angles() as f64
    }

    /// Trapezoid offset weight: interior db, endpoints db/2.
    pub fn offset_weight(&self, j: usize) -> f64 {
        if self.n_offsets() == 1 {
            return self.offset_step;
        }
        if j == 0 || j == self.n_offsets() - 1 {
            0.5 * self.offset_step
        } else {
            self.offset_step
        }
    }

    /// Scale weight including the measure power: |a|^{n-2} * |a| ln r.
    pub fn scale_weight(&self, k: usize) -> f64 {
        let a = self.scales[k].abs();
        a.powi(self.dim_n as i32 - 2) * a * self.log_ratio.ln()
    }

    /// Full cell weight w_{ijk} = |a_k|^{n-2} db da_k dtheta.
    pub fn weight(&self, _i: usize, j: usize, k: usize) -> f64 {
        self.angle_weight() * self.offset_weight(j) * self.scale_weight(k)
    }

    pub fn unit_direction(&self, i: usize) -> (f64, f64) {
        (self.angles[i].cos(), self.angles[i].sin())
    }

    pub fn abs_scale_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for &a in &self.scales {
            lo = lo.min(a.abs());
            hi = hi.max(a.abs());
        }
        (lo, hi)
    }

    pub fn has_both_signs(&self) -> bool {
        self.scales.iter().any(|&a| a > 0.0) && self.scales.iter().any(|&a| a < 0.0)
    }

    pub fn max_abs_offset(&self) -> f64 {
        self.offsets.start.abs().max(self.offsets.end().abs())
    }
}

/// Build coefficient axes. `b_spec` and `a_spec` are `(min, max, count)`;
/// the scale count is per sign and the grid is geometric with ratio
/// `(a_max / a_min)^{1/(count-1)}`.
pub fn make_coefficient_axes(
    n_angles: usize,
    b_spec: (f64, f64, usize),
    a_spec: (f64, f64, usize),
    n: u32,
) -> Result<CoefficientAxes> {
    let (b_min, b_max, b_count) = b_spec;
    let (a_min, a_max, a_count) = a_spec;
    if n_angles < 2 {
        return Err(Error::InvalidAxes("angle count must be >= 2".into()));
    }
    if n < 2 {
        return Err(Error::InvalidAxes("dimension n must be >= 2".into()));
    }
    if !(a_min > 0.0) {
        return Err(Error::InvalidAxes("a_min must be > 0 (scale a = 0 is excluded)".into()));
    }
    if !(a_max > a_min) {
        return Err(Error::InvalidAxes("a_max must exceed a_min".into()));
    }
    if a_count < 2 || b_count < 2 {
        return Err(Error::InvalidAxes("counts must be >= 2".into()));
    }
    if !(b_max >= b_min) {
        return Err(Error::InvalidAxes("b_max must be >= b_min".into()));
    }

    let angles: Vec<f64> = (0..n_angles).map(|i| TAU * i as f64 / n_angles as f64).collect();

    // Degenerate offset span keeps a positive unit measure so weights stay > 0.
    let (offsets, offset_step) = if b_max > b_min {
        let ax = UniformAxis::spanning(b_min, b_max, b_count);
        let step = ax.step;
        (ax, step)
    } else {
        (UniformAxis { start: b_min, step: 1.0, count: b_count }, 1.0)
    };

    let ratio = (a_max / a_min).powf(1.0 / (a_count - 1) as f64);
    let pos: Vec<f64> = (0..a_count).map(|k| a_min * ratio.powi(k as i32)).collect();
    let mut scales: Vec<f64> = pos.iter().rev().map(|a| -a).collect();
    scales.extend(pos.iter().copied());

    Ok(CoefficientAxes {
        angles,
        offsets,
        scales,
        log_ratio: ratio,
        dim_n: n,
        offset_step,
    })
}

/// Same angles/offsets with the scale range extended one octave on both ends
/// and the offset span doubled; grid densities are preserved. Used by the
/// decay diagnostics' domain-doubling studies.
pub fn doubled_domain_axes(axes: &CoefficientAxes) -> Result<CoefficientAxes> {
    let (a_lo, a_hi) = axes.abs_scale_range();
    let per_sign = axes.n_scales() / 2;
    let ln_r = axes.log_ratio.ln();
    let extra = (std::f64::consts::LN_2 / ln_r).ceil() as usize;
    let new_count = per_sign + 2 * extra;
    let new_lo = a_lo * axes.log_ratio.powi(-(extra as i32));
    let new_hi = a_hi * axes.log_ratio.powi(extra as i32);
    let b_half = axes.max_abs_offset() * 2.0;
    let b_count = ((2.0 * b_half / axes.offsets.step).round() as usize) + 1;
    make_coefficient_axes(
        axes.n_angles(),
        (-b_half, b_half, b_count),
        (new_lo, new_hi, new_count),
        axes.dim_n,
    )
}

/// Sampled function on Y^{n+1}, indexed `(angle, offset, scale)` row-major.
#[derive(Debug, Clone)]
pub struct CoefficientVolume {
    pub axes: CoefficientAxes,
    pub values: Vec<Complex64>,
}

impl CoefficientVolume {
    pub fn zeros(axes: CoefficientAxes) -> Self {
        let n = axes.n_cells();
        Self { axes, values: vec![Complex64::new(0.0, 0.0); n] }
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.axes.n_offsets() + j) * self.axes.n_scales() + k
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.values[self.idx(i, j, k)]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Complex64 {
        let id = self.idx(i, j, k);
        &mut self.values[id]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Plain (unweighted) relative RMS difference against `other`.
    pub fn rel_rms_distance(&self, other: &Self) -> f64 {
        assert_eq!(self.axes, other.axes, "axes mismatch");
        let num: f64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let den: f64 = other.values.iter().map(|v| v.norm_sqr()).sum();
        (num / den.max(1e-300)).sqrt()
    }
}

/// `sum w_{ijk} F conj(G)`, the discrete L2(Y^{n+1}) pairing.
pub fn inner_product_y(f: &CoefficientVolume, g: &CoefficientVolume) -> Result<Complex64> {
    if f.axes != g.axes {
        return Err(Error::AxesMismatch("inner_product_y requires shared axes".into()));
    }
    let ax = &f.axes;
    let wt = ax.angle_weight();
    let nb = ax.n_offsets();
    let ns = ax.n_scales();
    let wa: Vec<f64> = (0..ns).map(|k| ax.scale_weight(k)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..ax.n_angles() {
        for j in 0..nb {
            let wb = ax.offset_weight(j);
            let row = i * nb + j;
            let fs = &f.values[row * ns..(row + 1) * ns];
            let gs = &g.values[row * ns..(row + 1) * ns];
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..ns {
                acc += fs[k] * gs[k].conj() * wa[k];
            }
            total += acc * wb;
        }
    }
    Ok(total * wt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn small_axes() -> CoefficientAxes {
        make_coefficient_axes(4, (-1.0, 1.0, 5), (0.5, 4.0, 3), 2).unwrap()
    }

    #[test]
    fn geometric_scales_ratio_two() {
        let ax = make_coefficient_axes(4, (-1.0, 1.0, 3), (1.0, 4.0, 3), 2).unwrap();
        let expect = [-4.0, -2.0, -1.0, 1.0, 2.0, 4.0];
        assert_eq!(ax.scales.len(), 6);
        for (a, e) in ax.scales.iter().zip(expect.iter()) {
            assert!((a - e).abs() < 1e-12, "{a} vs {e}");
        }
    }

    #[test]
    fn rejects_zero_a_min() {
        assert!(make_coefficient_axes(4, (-1.0, 1.0, 3), (0.0, 4.0, 3), 2).is_err());
    }

    #[test]
    fn seven_scales_ratio() {
        let ax = make_coefficient_axes(2, (0.0, 0.0, 2), (0.5, 32.0, 7), 2).unwrap();
        assert_eq!(ax.n_scales(), 14);
        let r = 32f64.powf(1.0 / 6.0);
        assert!((ax.log_ratio - r).abs() < 1e-12);
        assert!((r - 2.0).abs() < 0.01);
    }

    #[test]
    fn weights_match_formula() {
        // n = 2: |a|^0, w = db * da_k * dtheta with da_k = |a_k| ln r.
        let ax = small_axes();
        let r = ax.log_ratio;
        let k = ax.n_scales() - 1; // a = 4
        let da = 4.0 * r.ln();
        let w = ax.weight(0, 1, k);
        let expect = (TAU / 4.0) * 0.5 * da;
        assert!((w - expect).abs() < 1e-12);
        // n = 3 picks up |a|^{n-2} = |a|
        let ax3 = make_coefficient_axes(4, (-1.0, 1.0, 5), (0.5, 4.0, 3), 3).unwrap();
        assert!((ax3.scale_weight(k) - 4.0 * da).abs() < 1e-12);
    }

    #[test]
    fn log_cell_width_value() {
        // ratio 2, a = 4: da = 4 ln 2 ~ 2.7726
        let ax = make_coefficient_axes(2, (-1.0, 1.0, 3), (1.0, 4.0, 3), 2).unwrap();
        let k = ax.scales.iter().position(|&a| (a - 4.0).abs() < 1e-12).unwrap();
        assert!((ax.scale_weight(k) - 4.0 * std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn weights_mirror_under_sign_flip() {
        let ax = small_axes();
        let ns = ax.n_scales();
        for k in 0..ns / 2 {
            let w1 = ax.scale_weight(k);
            let w2 = ax.scale_weight(ns - 1 - k);
            assert!((w1 - w2).abs() < 1e-13);
        }
    }

    #[test]
    fn inner_product_y_matches_triple_loop() {
        let ax = small_axes();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut rnd_vol = || {
            let mut v = CoefficientVolume::zeros(ax.clone());
            for z in v.values.iter_mut() {
                *z = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
            }
            v
        };
        let f = rnd_vol();
        let g = rnd_vol();
        let fast = inner_product_y(&f, &g).unwrap();
        let mut naive = Complex64::new(0.0, 0.0);
        for i in 0..ax.n_angles() {
            for j in 0..ax.n_offsets() {
                for k in 0..ax.n_scales() {
                    naive += f.at(i, j, k) * g.at(i, j, k).conj() * ax.weight(i, j, k);
                }
            }
        }
        assert!((fast - naive).norm() <= 1e-12 * naive.norm().max(1.0));
    }

    #[test]
    fn inner_product_y_single_cell() {
        let ax = small_axes();
        let mut f = CoefficientVolume::zeros(ax.clone());
        *f.at_mut(1, 2, 3) = Complex64::new(1.0, 0.0);
        let v = inner_product_y(&f, &f).unwrap();
        assert!((v.re - ax.weight(1, 2, 3)).abs() < 1e-14);
        assert!(v.im.abs() < 1e-16);
    }

    #[test]
    fn inner_product_y_conjugate_symmetry() {
        let ax = small_axes();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut f = CoefficientVolume::zeros(ax.clone());
        let mut g = CoefficientVolume::zeros(ax.clone());
        for z in f.values.iter_mut().chain(g.values.iter_mut()) {
            *z = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
        let fg = inner_product_y(&f, &g).unwrap();
        let gf = inner_product_y(&g, &f).unwrap();
        assert!((fg - gf.conj()).norm() < 1e-14);
    }

    #[test]
    fn inner_product_r2_gaussian_is_pi() {
        // int e^{-|x|^2} dx = pi; pair e^{-|x|^2/2} with itself.
        let geom = GridGeometry::centered_square(128, 0.15);
        let f = SignalGrid2D::from_fn(geom, |x, y| {
            Complex64::new((-0.5 * (x * x + y * y)).exp(), 0.0)
        });
        let v = inner_product_r2(&f, &f).unwrap();
        assert!((v.re - std::f64::consts::PI).abs() < 1e-8, "{}", v.re);
    }

    #[test]
    fn inner_product_r2_single_cell() {
        let geom = GridGeometry::centered_square(8, 0.5);
        let mut f = SignalGrid2D::zeros(geom);
        *f.at_mut(3, 4) = Complex64::new(1.0, 0.0);
        let v = inner_product_r2(&f, &f).unwrap();
        assert!((v.re - 0.25).abs() < 1e-15);
    }

    #[test]
    fn refining_axes_converges() {
        // Smooth profile on Y^3; discrepancy against a 4x refined reference
        // decreases monotonically when every axis is refined 2x.
        let profile = |th: f64, b: f64, a: f64| {
            Complex64::new((-b * b) .exp() * (th.cos() + 1.5) / (a.abs() + 1.0), 0.1 * b)
        };
        let build = |na: usize, nb: usize, ns: usize| {
            let ax = make_coefficient_axes(na, (-3.0, 3.0, nb), (0.5, 4.0, ns), 2).unwrap();
            let mut v = CoefficientVolume::zeros(ax.clone());
            for i in 0..ax.n_angles() {
                for j in 0..ax.n_offsets() {
                    for k in 0..ax.n_scales() {
                        *v.at_mut(i, j, k) = profile(ax.angles[i], ax.offsets.at(j), ax.scales[k]);
                    }
                }
            }
            v
        };
        let ip = |v: &CoefficientVolume| inner_product_y(v, v).unwrap().re;
        let coarse = ip(&build(8, 17, 6));
        let mid = ip(&build(16, 33, 12));
        let reference = ip(&build(32, 65, 24));
        assert!((mid - reference).abs() < (coarse - reference).abs());
    }
}
