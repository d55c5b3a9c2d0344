//! 2-D spectral utilities built on rustfft: padded centered spectrum tables
//! for polar resampling, and lattice spectral derivatives.

use crate::axis::UniformAxis;
use crate::grids::SignalGrid2D;
use crate::interp::bicubic_interp_idx;
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::TAU;

fn fft_2d(values: &mut [Complex64], nx: usize, ny: usize, inverse: bool) {
    let mut planner = FftPlanner::new();
    let fy = if inverse { planner.plan_fft_inverse(ny) } else { planner.plan_fft_forward(ny) };
    for row in values.chunks_exact_mut(ny) {
        fy.process(row);
    }
    let fx = if inverse { planner.plan_fft_inverse(nx) } else { planner.plan_fft_forward(nx) };
    let mut col = vec![Complex64::new(0.0, 0.0); nx];
    for iy in 0..ny {
        for ix in 0..nx {
            col[ix] = values[ix * ny + iy];
        }
        fx.process(&mut col);
        for ix in 0..nx {
            values[ix * ny + iy] = col[ix];
        }
    }
}

/// Centered, zero-padded spectrum of a grid, sampled on a uniform frequency
/// lattice covering `(-pi/dx, pi/dx) x (-pi/dy, pi/dy)`.
///
/// The table stores `F_c(xi) = sum_x f(x) e^{-i (x - x_c) . xi} dx dy` with
/// `x_c` the grid center, which keeps the tabulated function smooth; the full
/// transform is `F(xi) = e^{-i x_c . xi} F_c(xi)`.
pub struct SpectrumTable {
    pub axis_x: UniformAxis,
    pub axis_y: UniformAxis,
    pub values: Vec<Complex64>,
    pub center: (f64, f64),
}

impl SpectrumTable {
    pub fn build(grid: &SignalGrid2D, pad: usize) -> Self {
        let g = &grid.geom;
        let pad = pad.max(1);
        let npx = (g.nx * pad + 1) & !1usize;
        let npy = (g.ny * pad + 1) & !1usize;
        let mut buf = vec![Complex64::new(0.0, 0.0); npx * npy];
        for ix in 0..g.nx {
            for iy in 0..g.ny {
                buf[ix * npy + iy] = grid.at(ix, iy);
            }
        }
        fft_2d(&mut buf, npx, npy, false);

        let cx = g.x0 + 0.5 * g.dx * (g.nx - 1) as f64;
        let cy = g.y0 + 0.5 * g.dy * (g.ny - 1) as f64;
        let sx = cx - g.x0;
        let sy = cy - g.y0;
        let dxi_x = TAU / (npx as f64 * g.dx);
        let dxi_y = TAU / (npy as f64 * g.dy);
        let area = g.cell_area();

        // fftshift into ascending frequency order with the center phase applied
        let mut values = vec![Complex64::new(0.0, 0.0); npx * npy];
        for mx in 0..npx {
            let kx = (mx + npx / 2) % npx; // source index for shifted output
            let xi_x = dxi_x * (mx as f64 - (npx / 2) as f64);
            let px = Complex64::new(0.0, sx * xi_x).exp();
            for my in 0..npy {
                let ky = (my + npy / 2) % npy;
                let xi_y = dxi_y * (my as f64 - (npy / 2) as f64);
                let py = Complex64::new(0.0, sy * xi_y).exp();
                values[mx * npy + my] = buf[kx * npy + ky] * px * py * area;
            }
        }
        SpectrumTable {
            axis_x: UniformAxis::new(-dxi_x * (npx / 2) as f64, dxi_x, npx),
            axis_y: UniformAxis::new(-dxi_y * (npy / 2) as f64, dxi_y, npy),
            values,
            center: (cx, cy),
        }
    }

    /// `F(xi) = sum f(x) e^{-i x . xi} dx dy` at an arbitrary frequency point,
    /// by bicubic interpolation of the centered table.
    pub fn eval(&self, xi_x: f64, xi_y: f64) -> Complex64 {
        let fx = self.axis_x.index_of(xi_x);
        let fy = self.axis_y.index_of(xi_y);
        let v = bicubic_interp_idx(&self.values, self.axis_x.count, self.axis_y.count, fx, fy);
        v * Complex64::new(0.0, -(self.center.0 * xi_x + self.center.1 * xi_y)).exp()
    }
}

/// Signed DFT lattice frequency for index `m` of `n` samples at spacing `d`.
#[inline]
fn lattice_freq(m: usize, n: usize, d: f64) -> f64 {
    let half = n / 2;
    let signed = if m <= half { m as isize } else { m as isize - n as isize };
    TAU * signed as f64 / (n as f64 * d)
}

/// Derivative `d^{ax+ay} f / dx^{ax} dy^{ay}` of the band-limited lattice
/// interpolant, via FFT multiplication by `(i xi_x)^{ax} (i xi_y)^{ay}`.
pub fn spectral_derivative(grid: &SignalGrid2D, ax: u32, ay: u32) -> SignalGrid2D {
    let g = grid.geom;
    let (nx, ny) = (g.nx, g.ny);
    let mut buf = grid.values.clone();
    fft_2d(&mut buf, nx, ny, false);
    for mx in 0..nx {
        let fx = Complex64::new(0.0, lattice_freq(mx, nx, g.dx)).powu(ax);
        for my in 0..ny {
            let fy = Complex64::new(0.0, lattice_freq(my, ny, g.dy)).powu(ay);
            buf[mx * ny + my] *= fx * fy;
        }
    }
    fft_2d(&mut buf, nx, ny, true);
    let scale = 1.0 / (nx * ny) as f64;
    for v in buf.iter_mut() {
        *v *= scale;
    }
    SignalGrid2D { geom: g, values: buf }
}

/// Plain 2-D forward transform of the samples (lattice frequencies, unpadded),
/// returned as a `SpectrumTable` with pad 1. Convenience wrapper.
pub fn grid_spectrum(grid: &SignalGrid2D) -> SpectrumTable {
    SpectrumTable::build(grid, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::GridGeometry;

    #[test]
    fn padded_table_matches_direct_sum() {
        let geom = GridGeometry::centered_square(48, 0.25);
        let f = SignalGrid2D::from_fn(geom, |x, y| {
            Complex64::new(0.0, 3.0 * x - 1.0 * y).exp() * (-0.5 * (x * x + y * y)).exp()
        });
        let table = SpectrumTable::build(&f, 8);
        let direct = |xx: f64, xy: f64| -> Complex64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for ix in 0..geom.nx {
                for iy in 0..geom.ny {
                    let ph = -(geom.x(ix) * xx + geom.y(iy) * xy);
                    acc += f.at(ix, iy) * Complex64::new(0.0, ph).exp();
                }
            }
            acc * geom.cell_area()
        };
        let mut worst = 0.0f64;
        for &(xx, xy) in &[(3.0, -1.0), (2.2, -0.7), (0.9, 1.3), (-3.0, 1.0)] {
            let d = direct(xx, xy);
            let t = table.eval(xx, xy);
            worst = worst.max((d - t).norm());
        }
        // peak of the transform is ~ 2 pi sigma^2 = 6.28
        assert!(worst < 2e-3, "worst abs err {worst:.3e}");
    }

    #[test]
    fn spectral_derivative_of_modulated_gaussian() {
        let geom = GridGeometry::centered_square(96, 0.2);
        let f = SignalGrid2D::from_fn(geom, |x, y| {
            Complex64::new(0.0, 4.0 * x).exp() * (-0.5 * (x * x + y * y)).exp()
        });
        let dfdx = spectral_derivative(&f, 1, 0);
        // d/dx (e^{i4x} e^{-r^2/2}) = (4i - x) f
        let mut worst = 0.0f64;
        for ix in (8..88).step_by(5) {
            for iy in (8..88).step_by(5) {
                let x = geom.x(ix);
                let expect = f.at(ix, iy) * Complex64::new(-x, 4.0);
                worst = worst.max((dfdx.at(ix, iy) - expect).norm());
            }
        }
        assert!(worst < 1e-9, "worst {worst:.3e}");
    }
}
