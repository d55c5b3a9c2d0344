//! Directional Stockwell transform toolkit for 2-D signals.
//!
//! The transform sends a function on R^2 to coefficients on
//! Y^3 = S^1 x R x R^x, localizing in direction `u`, offset `b`, and signed
//! scale/frequency `a`, with the absolutely referenced phase `e^{-i a (x.u)}`.
//! Three forward routes are provided (direct quadrature, Fourier-slice, and
//! Radon factorization), together with the synthesis operator, reconstruction,
//! admissibility calculus for S1 windows, and verification harnesses for the
//! Parseval, reconstruction, transpose, and Fourier-slice identities.
//!
//! Start from the `examples/` directory: each runnable example exercises one
//! capability end to end. The `dst` binary exposes the same operations as
//! subcommands (`window`, `analyze`, `synthesize`, `verify`, `export-slice`).

pub mod axis;
pub mod cli;
pub mod diagnostics;
pub mod dst;
pub mod error;
pub mod grids;
pub mod harness;
pub mod interp;
pub mod io;
pub mod quad;
pub mod radon;
pub mod spectral;
pub mod stockwell;
pub mod synthesis;
pub mod window;

pub use error::{Error, Result};
pub use grids::{
    inner_product_r2, inner_product_y, make_coefficient_axes, CoefficientAxes, CoefficientVolume,
    GridGeometry, SignalGrid2D,
};
pub use window::{
    admissibility_constant, check_s1, derivative_window, freq_bump_window, gaussian_window,
    moments, AdmissibilityResult, Window1D, WindowGrids, WindowKind,
};
