//! Adaptive Simpson quadrature for complex integrands.

use num_complex::Complex64;

struct Panel {
    a: f64,
    m: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    coarse: Complex64,
}

fn simpson(a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

/// Adaptive Simpson over `[a, b]` with Richardson acceptance.
///
/// Returns the integral and an accumulated absolute error estimate.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64, max_depth: usize) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    if !(b > a) {
        return (Complex64::new(0.0, 0.0), 0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let coarse = simpson(a, b, fa, fm, fb);
    let root = Panel { a, m, b, fa, fm, fb, coarse };
    recurse(f, root, tol, max_depth)
}

fn recurse<F>(f: &F, p: Panel, tol: f64, depth: usize) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let lm = 0.5 * (p.a + p.m);
    let rm = 0.5 * (p.m + p.b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(p.a, p.m, p.fa, flm, p.fm);
    let right = simpson(p.m, p.b, p.fm, frm, p.fb);
    let fine = left + right;
    let delta = fine - p.coarse;
    if depth == 0 || delta.norm() <= 15.0 * tol {
        (fine + delta / 15.0, delta.norm() / 15.0)
    } else {
        let pl = Panel { a: p.a, m: lm, b: p.m, fa: p.fa, fm: flm, fb: p.fm, coarse: left };
        let pr = Panel { a: p.m, m: rm, b: p.b, fa: p.fm, fm: frm, fb: p.fb, coarse: right };
        let (vl, el) = recurse(f, pl, 0.5 * tol, depth - 1);
        let (vr, er) = recurse(f, pr, 0.5 * tol, depth - 1);
        (vl + vr, el + er)
    }
}
