//! Hypersurface sampling by fiber root solving, entirely in log-polar
//! coordinates: a point x ∈ (ℂ∖{0})² is carried as (u, θ) with
//! xⱼ = exp(uⱼ + iθⱼ). Pinning one coordinate turns f = 0 into a univariate
//! polynomial whose coefficients are complex log-sum-exp aggregates; its
//! roots come back from the scaled solver in the same log-polar form, so
//! no intermediate value ever leaves the f64 range, no matter how large the
//! Hadamard power.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec;
use crate::poly::{LaurentPolynomial, LogPolynomial};
use crate::raster::Window;
use crate::roots::{solve_log_poly, LogComplex};

/// Root-solver tolerance used throughout the sampling pipeline.
pub(crate) const FIBER_TOL: f64 = 1e-12;

/// One sampled zero-set point in log-polar coordinates.
#[derive(Clone, Copy, Debug)]
pub struct LogSample {
    pub u: [f64; 2],
    pub theta: [f64; 2],
}

impl LogSample {
    pub fn to_complex(&self) -> [Complex64; 2] {
        [
            Complex64::from_polar(self.u[0].exp(), self.theta[0]),
            Complex64::from_polar(self.u[1].exp(), self.theta[1]),
        ]
    }
}

pub(crate) fn depends_on_both(lp: &LogPolynomial) -> bool {
    if lp.n != 2 {
        return false;
    }
    (0..2).all(|axis| {
        let lo = lp.terms.iter().map(|t| t.exp[axis]).min();
        let hi = lp.terms.iter().map(|t| t.exp[axis]).max();
        lo != hi
    })
}

/// Stable sum of complex numbers given in log-polar form; returns `None`
/// when they cancel exactly.
fn complex_log_sum(parts: &[(f64, f64)]) -> Option<(f64, f64)> {
    let m = parts
        .iter()
        .map(|&(l, _)| l)
        .fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return None;
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for &(l, phase) in parts {
        acc += Complex64::from_polar((l - m).exp(), phase);
    }
    let norm = acc.norm();
    if norm == 0.0 {
        None
    } else {
        Some((m + norm.ln(), acc.arg()))
    }
}

/// The fiber polynomial along `solve_axis` with the other coordinate pinned
/// at modulus e^u, phase θ. Returns the lowest Laurent degree and the
/// cleared coefficients (both ends present), or `None` when the fiber
/// degenerates to the zero polynomial or a monomial.
pub(crate) fn fiber_coefficients(
    lp: &LogPolynomial,
    solve_axis: usize,
    u: f64,
    theta: f64,
) -> Option<(i64, Vec<Option<(f64, f64)>>)> {
    let pinned = 1 - solve_axis;
    let dmin = lp.terms.iter().map(|t| t.exp[solve_axis]).min()?;
    let dmax = lp.terms.iter().map(|t| t.exp[solve_axis]).max()?;
    let mut buckets: Vec<Vec<(f64, f64)>> = vec![Vec::new(); (dmax - dmin + 1) as usize];
    for t in &lp.terms {
        let k = (t.exp[solve_axis] - dmin) as usize;
        let e = t.exp[pinned] as f64;
        buckets[k].push((t.log_mod + e * u, t.phase + e * theta));
    }
    let mut coeffs: Vec<Option<(f64, f64)>> = buckets
        .iter()
        .map(|b| {
            if b.is_empty() {
                None
            } else {
                complex_log_sum(b)
            }
        })
        .collect();
    let mut lo = 0usize;
    while lo < coeffs.len() && coeffs[lo].is_none() {
        lo += 1;
    }
    let mut hi = coeffs.len();
    while hi > lo && coeffs[hi - 1].is_none() {
        hi -= 1;
    }
    if hi - lo < 2 {
        return None; // constant or empty fiber: no roots
    }
    coeffs.truncate(hi);
    coeffs.drain(..lo);
    Some((dmin + lo as i64, coeffs))
}

/// Roots of the fiber along `solve_axis` at the pinned (u, θ), in log-polar
/// form, together with the cleared polynomial's lowest Laurent degree.
pub(crate) struct FiberSolve {
    pub dmin: i64,
    pub roots: Vec<LogComplex>,
    pub complete: bool,
}

pub(crate) fn solve_fiber(
    lp: &LogPolynomial,
    solve_axis: usize,
    u: f64,
    theta: f64,
) -> Option<FiberSolve> {
    let (dmin, coeffs) = fiber_coefficients(lp, solve_axis, u, theta)?;
    let fr = solve_log_poly(&coeffs, FIBER_TOL);
    Some(FiberSolve {
        dmin,
        roots: fr.roots,
        complete: fr.complete,
    })
}

/// Samples the zero set over the window: for each of the two sweep axes, a
/// `slices` grid of pinned log-moduli and a `thetas` grid of pinned phases,
/// keeping the fiber roots whose log-modulus lands inside the window.
/// Deterministic ordering; slices run in parallel.
pub fn sample_zero_set(
    lp: &LogPolynomial,
    window: &Window,
    slices: usize,
    thetas: usize,
) -> Result<Vec<LogSample>> {
    if lp.n != 2 {
        return Err(Error::UnsupportedDimension(lp.n));
    }
    if !depends_on_both(lp) {
        return Err(Error::UnivariateFiber);
    }
    if slices == 0 || thetas == 0 {
        return Err(Error::InvalidArgument("slices and thetas must be positive".into()));
    }
    let mut all = Vec::new();
    for pinned_axis in 0..2usize {
        let solve_axis = 1 - pinned_axis;
        let pin_range = window.axis(pinned_axis);
        let out_range = window.axis(solve_axis);
        let step = (pin_range[1] - pin_range[0]) / slices as f64;
        let per_slice: Vec<Vec<LogSample>> = exec::map_indices(slices, |i| {
            let u_pin = pin_range[0] + (i as f64 + 0.5) * step;
            let mut rows = Vec::new();
            for j in 0..thetas {
                let theta_pin = 2.0 * std::f64::consts::PI * j as f64 / thetas as f64;
                if let Some(solve) = solve_fiber(lp, solve_axis, u_pin, theta_pin) {
                    for root in &solve.roots {
                        if !root.ln_mod.is_finite() {
                            continue;
                        }
                        if root.ln_mod < out_range[0] || root.ln_mod > out_range[1] {
                            continue;
                        }
                        let mut u = [0.0; 2];
                        let mut th = [0.0; 2];
                        u[pinned_axis] = u_pin;
                        u[solve_axis] = root.ln_mod;
                        th[pinned_axis] = theta_pin;
                        th[solve_axis] = root.arg;
                        rows.push(LogSample { u, theta: th });
                    }
                }
            }
            rows
        });
        all.extend(per_slice.into_iter().flatten());
    }
    Ok(all)
}

/// Zero-set samples as complex points; this is the r = 1 public face of the
/// log-polar sampler. The per-fiber root count is bounded by the Laurent
/// degree spread in each variable, so the output has at most
/// slices × thetas × (deg_x + deg_y) points.
pub fn sample_hypersurface(
    f: &LaurentPolynomial,
    window: &Window,
    thetas: usize,
    slices: usize,
) -> Result<Vec<[Complex64; 2]>> {
    let lp = f.log_view(1.0);
    let samples = sample_zero_set(&lp, window, slices, thetas)?;
    Ok(samples.iter().map(|s| s.to_complex()).collect())
}
