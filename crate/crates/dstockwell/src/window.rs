//! 1-D analysis/reconstruction windows: construction, spectral tables,
//! class-S1 validation, moments, and the admissibility constant.
//!
//! Convention: `psi_hat(xi) = int psi(x) e^{-i x xi} dx`, inverse carries
//! `(2 pi)^{-1}`. A window is S1-valid when its spectrum vanishes near
//! `xi = -1`; the admissibility constant couples an analysis window to a
//! reconstruction window via
//! `C = (1/pi) int conj(psi_hat(xi-1)) eta_hat(xi-1) |xi|^{-n} dxi`.

use crate::axis::UniformAxis;
use crate::error::{Error, Result};
use crate::interp::cubic_interp;
use crate::quad::adaptive_simpson;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

pub const S1_TOL_DEFAULT: f64 = 1e-10;
pub const S1_DELTA_DEFAULT: f64 = 0.1;
/// Excluded neighborhood of xi = 0 in the admissibility quadrature.
pub const ADMISSIBILITY_EPS0: f64 = 1e-6;
/// |C| below this rejects the pair.
pub const RECONSTRUCTION_PAIR_MIN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WindowKind {
    /// Spectral bump `exp(-1/(1 - u^2))`, `u = (xi - center)/halfwidth`.
    FreqBump { center: f64, halfwidth: f64 },
    /// Spectral indicator of `[lo, hi]`.
    BoxSpectrum { lo: f64, hi: f64 },
    /// Time Gaussian `exp(-x^2 / (2 sigma^2))`.
    Gaussian { sigma: f64 },
    /// `order`-th derivative of a base window (spectral factor `(i xi)^order`).
    Derived { base: Box<WindowKind>, order: u32 },
    /// Tables only; no closed form.
    Tabulated,
}

impl WindowKind {
    /// Closed-form spectrum, if available.
    fn spectral_closed(&self, xi: f64) -> Option<Complex64> {
        match self {
            WindowKind::FreqBump { center, halfwidth } => {
                Some(Complex64::new(bump_profile((xi - center) / halfwidth), 0.0))
            }
            WindowKind::BoxSpectrum { lo, hi } => {
                let v = if xi >= *lo && xi <= *hi { 1.0 } else { 0.0 };
                Some(Complex64::new(v, 0.0))
            }
            WindowKind::Gaussian { sigma } => {
                let s = *sigma;
                Some(Complex64::new(s * TAU.sqrt() / 2f64.sqrt() * (-0.5 * s * s * xi * xi).exp(), 0.0))
            }
            WindowKind::Derived { base, order } => {
                let b = base.spectral_closed(xi)?;
                Some(Complex64::new(0.0, xi).powu(*order) * b)
            }
            WindowKind::Tabulated => None,
        }
    }

    /// Interval outside which the spectrum is negligible (used for synthesis
    /// and admissibility bounds). `None` for tabulated windows.
    fn spectral_support(&self) -> Option<(f64, f64)> {
        match self {
            WindowKind::FreqBump { center, halfwidth } => (halfwidth > &0.0).then(|| (center - halfwidth, center + halfwidth)),
            WindowKind::BoxSpectrum { lo, hi } => Some((*lo, *hi)),
            WindowKind::Gaussian { sigma } => {
                let reach = 14.0 / sigma.max(1e-6);
                Some((-reach, reach))
            }
            WindowKind::Derived { base, .. } => base.spectral_support(),
            WindowKind::Tabulated => None,
        }
    }

    fn default_time_grid(&self) -> (f64, f64) {
        match self {
            WindowKind::FreqBump { .. } => (1200.0, 0.05),
            WindowKind::BoxSpectrum { .. } => (64.0, 0.05),
            WindowKind::Gaussian { sigma } => ((20.0 * sigma).max(16.0), (sigma / 25.0).min(0.05)),
            WindowKind::Derived { base, .. } => base.default_time_grid(),
            WindowKind::Tabulated => (64.0, 0.05),
        }
    }
}

#[inline]
fn bump_profile(u: f64) -> f64 {
    let u2 = u * u;
    if u2 >= 1.0 - 1e-14 {
        0.0
    } else {
        (-1.0 / (1.0 - u2)).exp()
    }
}

/// Requested table sizes for window construction.
#[derive(Debug, Clone)]
pub struct WindowGrids {
    /// Spectral table span `[-max, max]` and sample count.
    pub spectral_halfwidth: f64,
    pub spectral_count: usize,
    /// Time table `[-half, half]`; `None` picks a per-kind default.
    pub time: Option<(f64, f64)>,
}

impl Default for WindowGrids {
    fn default() -> Self {
        Self { spectral_halfwidth: 8.0, spectral_count: 2049, time: None }
    }
}

/// Sampled window: time table, spectral table, and S1 metadata.
#[derive(Debug, Clone)]
pub struct Window1D {
    pub kind: WindowKind,
    pub time_axis: UniformAxis,
    pub time_values: Vec<Complex64>,
    pub spec_axis: UniformAxis,
    pub spec_values: Vec<Complex64>,
    pub s1_flag: bool,
    pub s1_defect: f64,
}

impl Window1D {
    /// Cubic interpolation of the time table; zero outside.
    #[inline]
    pub fn time_at(&self, t: f64) -> Complex64 {
        cubic_interp(&self.time_axis, &self.time_values, t)
    }

    /// Cubic interpolation of the spectral table; zero outside.
    #[inline]
    pub fn spectral_at(&self, xi: f64) -> Complex64 {
        cubic_interp(&self.spec_axis, &self.spec_values, xi)
    }

    /// Closed-form spectrum when the kind has one, table interpolation otherwise.
    pub fn spectral_exact(&self, xi: f64) -> Complex64 {
        self.kind.spectral_closed(xi).unwrap_or_else(|| self.spectral_at(xi))
    }

    pub fn spec_peak(&self) -> f64 {
        self.spec_values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn time_peak(&self) -> f64 {
        self.time_values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Spectral support: closed-form bounds clipped to the table, or a scan of
    /// the table for tabulated windows.
    pub fn spectral_support(&self) -> (f64, f64) {
        if let Some((lo, hi)) = self.kind.spectral_support() {
            return (lo.max(self.spec_axis.start), hi.min(self.spec_axis.end()));
        }
        let peak = self.spec_peak();
        if peak == 0.0 {
            return (0.0, 0.0);
        }
        let thr = 1e-14 * peak;
        let mut lo = self.spec_axis.end();
        let mut hi = self.spec_axis.start;
        for (l, v) in self.spec_values.iter().enumerate() {
            if v.norm() > thr {
                lo = lo.min(self.spec_axis.at(l));
                hi = hi.max(self.spec_axis.at(l));
            }
        }
        (lo, hi)
    }

    /// Largest |t| at which the time table still reaches `rel` of its peak.
    pub fn tail_radius(&self, rel: f64) -> f64 {
        let peak = self.time_peak();
        if peak == 0.0 {
            return 0.0;
        }
        let thr = rel * peak;
        let n = self.time_values.len();
        let mut radius = 0.0f64;
        for m in 0..n {
            if self.time_values[m].norm() >= thr {
                radius = radius.max(self.time_axis.at(m).abs());
            }
        }
        radius
    }
}

/// Synthesize time samples from a closed-form spectrum over `[slo, shi]`.
///
/// The synthesis step is tied to the time extent so spectral-sum periodization
/// (period `2 pi / d_xi`) stays well outside the table.
fn synthesize_time(kind: &WindowKind, time_axis: &UniformAxis, slo: f64, shi: f64) -> Vec<Complex64> {
    let t_half = time_axis.start.abs().max(time_axis.end().abs());
    let period = 2.4 * t_half + 100.0;
    let dxi = TAU / period;
    let count = ((shi - slo) / dxi).ceil() as usize + 1;
    let n = time_axis.count;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let coef = dxi / TAU;
    for l in 0..count {
        let xi = slo + dxi * l as f64;
        let c = match kind.spectral_closed(xi) {
            Some(v) => v * coef,
            None => Complex64::new(0.0, 0.0),
        };
        if c.norm_sqr() == 0.0 {
            continue;
        }
        let step = Complex64::new(0.0, time_axis.step * xi).exp();
        let mut phase = Complex64::new(0.0, time_axis.start * xi).exp();
        for (m, o) in out.iter_mut().enumerate() {
            // re-anchor the recurrence to keep phase drift below ~1e-13 rad
            if m % 512 == 0 {
                phase = Complex64::new(0.0, time_axis.at(m) * xi).exp();
            }
            *o += c * phase;
            phase *= step;
        }
    }
    out
}

/// Synthesize time samples directly from a sampled spectral table (tabulated
/// or derived-from-table windows).
fn synthesize_time_from_table(
    spec_axis: &UniformAxis,
    spec_values: &[Complex64],
    time_axis: &UniformAxis,
) -> Vec<Complex64> {
    let n = time_axis.count;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let coef = spec_axis.step / TAU;
    for (l, sv) in spec_values.iter().enumerate() {
        if sv.norm_sqr() == 0.0 {
            continue;
        }
        let xi = spec_axis.at(l);
        let c = sv * coef;
        let step = Complex64::new(0.0, time_axis.step * xi).exp();
        let mut phase = Complex64::new(0.0, time_axis.start * xi).exp();
        for (m, o) in out.iter_mut().enumerate() {
            if m % 512 == 0 {
                phase = Complex64::new(0.0, time_axis.at(m) * xi).exp();
            }
            *o += c * phase;
            phase *= step;
        }
    }
    out
}

fn build_window(kind: WindowKind, grids: &WindowGrids) -> Result<Window1D> {
    let spec_axis = UniformAxis::symmetric(grids.spectral_halfwidth, 2.0 * grids.spectral_halfwidth / (grids.spectral_count - 1) as f64);
    let spec_values: Vec<Complex64> = (0..spec_axis.count)
        .map(|l| kind.spectral_closed(spec_axis.at(l)).unwrap_or_default())
        .collect();
    let (t_half, t_step) = grids.time.unwrap_or_else(|| kind.default_time_grid());
    let time_axis = UniformAxis::symmetric(t_half, t_step);
    let (slo, shi) = kind
        .spectral_support()
        .map(|(lo, hi)| (lo.max(spec_axis.start), hi.min(spec_axis.end())))
        .unwrap_or((spec_axis.start, spec_axis.end()));
    let time_values = synthesize_time(&kind, &time_axis, slo, shi);
    let mut w = Window1D {
        kind,
        time_axis,
        time_values,
        spec_axis,
        spec_values,
        s1_flag: false,
        s1_defect: 0.0,
    };
    let (flag, defect) = check_s1(&w, S1_TOL_DEFAULT, S1_DELTA_DEFAULT)?;
    w.s1_flag = flag;
    w.s1_defect = defect;
    Ok(w)
}

/// Frequency-bump window: spectrum `exp(-1/(1-((xi-c)/h)^2))` on `|xi-c| < h`.
pub fn freq_bump_window(center: f64, halfwidth: f64, grids: &WindowGrids) -> Result<Window1D> {
    if !(halfwidth > 0.0) {
        return Err(Error::InvalidWindow("halfwidth must be positive".into()));
    }
    if center.abs() + halfwidth > grids.spectral_halfwidth {
        return Err(Error::InvalidWindow(format!(
            "bump support ({}, {}) exceeds the spectral table [-{}, {}]",
            center - halfwidth,
            center + halfwidth,
            grids.spectral_halfwidth,
            grids.spectral_halfwidth
        )));
    }
    build_window(WindowKind::FreqBump { center, halfwidth }, grids)
}

/// Spectral indicator window on `[lo, hi]`.
pub fn box_window(lo: f64, hi: f64, grids: &WindowGrids) -> Result<Window1D> {
    if !(hi > lo) {
        return Err(Error::InvalidWindow("box needs hi > lo".into()));
    }
    build_window(WindowKind::BoxSpectrum { lo, hi }, grids)
}

/// Time-domain Gaussian `exp(-x^2/(2 sigma^2))`; not S1-admissible.
pub fn gaussian_window(sigma: f64, grids: &WindowGrids) -> Result<Window1D> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidWindow("sigma must be positive".into()));
    }
    build_window(WindowKind::Gaussian { sigma }, grids)
}

/// Window from stored tables (file loading); S1 metadata is recomputed.
pub fn window_from_tables(
    kind: WindowKind,
    time_axis: UniformAxis,
    time_values: Vec<Complex64>,
    spec_axis: UniformAxis,
    spec_values: Vec<Complex64>,
) -> Result<Window1D> {
    if time_values.len() != time_axis.count || spec_values.len() != spec_axis.count {
        return Err(Error::InvalidWindow("table lengths do not match axes".into()));
    }
    let mut w = Window1D {
        kind,
        time_axis,
        time_values,
        spec_axis,
        spec_values,
        s1_flag: false,
        s1_defect: 0.0,
    };
    let (flag, defect) = check_s1(&w, S1_TOL_DEFAULT, S1_DELTA_DEFAULT)?;
    w.s1_flag = flag;
    w.s1_defect = defect;
    Ok(w)
}

/// Max of |psi_hat| over `|xi + 1| <= delta` and the S1 verdict
/// `defect <= tol * max|psi_hat|`. A trivial (all-zero) window fails.
pub fn check_s1(w: &Window1D, tol: f64, delta: f64) -> Result<(bool, f64)> {
    if !(w.spec_axis.start <= -1.0 - delta && w.spec_axis.end() >= -1.0 + delta) {
        return Err(Error::SpectralCoverage(format!(
            "spectral table [{}, {}] must cover [{}, {}]",
            w.spec_axis.start,
            w.spec_axis.end(),
            -1.0 - delta,
            -1.0 + delta
        )));
    }
    let n = 4001;
    let mut defect = 0.0f64;
    for i in 0..n {
        let xi = -1.0 - delta + 2.0 * delta * i as f64 / (n - 1) as f64;
        defect = defect.max(w.spectral_exact(xi).norm());
    }
    let peak = w.spec_peak();
    if peak == 0.0 {
        return Ok((false, defect));
    }
    Ok((defect <= tol * peak, defect))
}

/// Moments `m_k = int x^k e^{ix} psi(x) dx`, k = 0..k_max, by trapezoid rule
/// over the time table.
pub fn moments(w: &Window1D, k_max: usize) -> Vec<Complex64> {
    let n = w.time_axis.count;
    let dt = w.time_axis.step;
    let mut out = vec![Complex64::new(0.0, 0.0); k_max + 1];
    for m in 0..n {
        let x = w.time_axis.at(m);
        let wt = if m == 0 || m == n - 1 { 0.5 * dt } else { dt };
        let base = w.time_values[m] * Complex64::new(0.0, x).exp() * wt;
        let mut xpow = 1.0;
        for mk in out.iter_mut() {
            *mk += base * xpow;
            xpow *= x;
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct AdmissibilityResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub n: u32,
    pub warnings: Vec<String>,
}

/// `C_{psi,eta} = (1/pi) int conj(psi_hat(xi-1)) eta_hat(xi-1) |xi|^{-n} dxi`
/// by adaptive Simpson over the joint spectral support, excluding
/// `|xi| < ADMISSIBILITY_EPS0`. Errors with `NotReconstructionPair` when the
/// value is numerically zero.
pub fn admissibility_constant(psi: &Window1D, eta: &Window1D, n: u32) -> Result<AdmissibilityResult> {
    let mut warnings = Vec::new();
    if !psi.s1_flag || !eta.s1_flag {
        warnings.push("window pair is not S1-valid; integrand may be singular at xi = 0".into());
    }
    let (plo, phi) = psi.spectral_support();
    let (elo, ehi) = eta.spectral_support();
    // Supports live in the shifted variable xi - 1.
    let lo = plo.max(elo) + 1.0;
    let hi = phi.min(ehi) + 1.0;
    if !(hi > lo) {
        return Err(Error::NotReconstructionPair { c_abs: 0.0, threshold: RECONSTRUCTION_PAIR_MIN });
    }
    let power = n as i32;
    let integrand = |xi: f64| -> Complex64 {
        psi.spectral_exact(xi - 1.0).conj() * eta.spectral_exact(xi - 1.0) / xi.abs().powi(power)
    };
    let tol = 1e-12;
    let depth = 48;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let eps = ADMISSIBILITY_EPS0;
    let segments: Vec<(f64, f64)> = if lo < -eps && hi > eps {
        vec![(lo, -eps), (eps, hi)]
    } else if hi <= -eps || lo >= eps {
        vec![(lo, hi)]
    } else {
        // support swallowed by the excluded neighborhood
        vec![]
    };
    for (a, b) in segments {
        let (v, e) = adaptive_simpson(&integrand, a, b, tol, depth);
        value += v;
        err += e;
    }
    if lo < eps && hi > -eps {
        // Bound the excluded mass by the S1 defects.
        let dpsi = psi.s1_defect.max(psi.spectral_exact(-1.0).norm());
        let deta = eta.s1_defect.max(eta.spectral_exact(-1.0).norm());
        let excluded = if n == 1 {
            2.0 * (1.0 / eps).ln()
        } else {
            2.0 / ((n as f64 - 1.0) * eps.powi(power - 1))
        };
        err += dpsi * deta * excluded / PI;
    }
    value /= PI;
    err /= PI;
    if value.norm() < RECONSTRUCTION_PAIR_MIN {
        return Err(Error::NotReconstructionPair { c_abs: value.norm(), threshold: RECONSTRUCTION_PAIR_MIN });
    }
    Ok(AdmissibilityResult { value, abs_error_estimate: err, n, warnings })
}

/// k-th derivative window: spectral table times `(i xi)^k`, time samples
/// re-synthesized.
pub fn derivative_window(w: &Window1D, k: u32) -> Window1D {
    if k == 0 {
        return w.clone();
    }
    let spec_values: Vec<Complex64> = (0..w.spec_axis.count)
        .map(|l| {
            let xi = w.spec_axis.at(l);
            w.spec_values[l] * Complex64::new(0.0, xi).powu(k)
        })
        .collect();
    let kind = match &w.kind {
        WindowKind::Derived { base, order } => WindowKind::Derived { base: base.clone(), order: order + k },
        WindowKind::Tabulated => WindowKind::Tabulated,
        other => WindowKind::Derived { base: Box::new(other.clone()), order: k },
    };
    let time_values = if kind.spectral_closed(0.0).is_some() {
        let (slo, shi) = kind
            .spectral_support()
            .map(|(lo, hi)| (lo.max(w.spec_axis.start), hi.min(w.spec_axis.end())))
            .unwrap_or((w.spec_axis.start, w.spec_axis.end()));
        synthesize_time(&kind, &w.time_axis, slo, shi)
    } else {
        synthesize_time_from_table(&w.spec_axis, &spec_values, &w.time_axis)
    };
    let mut out = Window1D {
        kind,
        time_axis: w.time_axis.clone(),
        time_values,
        spec_axis: w.spec_axis.clone(),
        spec_values,
        s1_flag: false,
        s1_defect: 0.0,
    };
    if let Ok((flag, defect)) = check_s1(&out, S1_TOL_DEFAULT, S1_DELTA_DEFAULT) {
        out.s1_flag = flag;
        out.s1_defect = defect;
    }
    out
}
