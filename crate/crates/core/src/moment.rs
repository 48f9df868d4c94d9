//! Moment maps and their images: the compactified amoeba (μ_S of the zero
//! set) and the weighted compactified amoeba WCA(f^[r]) (μ_{f^[r]}).
//!
//! Both maps factor through u = Log|x|, and the weights are softmax of
//! affine logits in u, so every computation here runs on log-scale data;
//! the Hadamard exponent r only scales the coefficient logits and never
//! gets exponentiated on its own. That is what keeps r = 256 (or any r)
//! inside f64.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::amoeba::auto_window_log;
use crate::error::{Error, Result};
use crate::exec;
use crate::fiber::sample_zero_set;
use crate::numerics::softmax_weights;
use crate::poly::{LaurentPolynomial, LogPolynomial};
use crate::raster::Window;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    /// Log coordinates (amoeba space).
    Log,
    /// Inside the Newton polytope (moment space).
    Polytope,
}

/// A finite planar point cloud; canonical form is lexicographically sorted,
/// which makes serialized artifacts and Hausdorff comparisons reproducible.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    pub ambient: Ambient,
    pub points: Vec<[f64; 2]>,
}

impl PointCloud {
    pub fn log_space(mut points: Vec<[f64; 2]>) -> Self {
        sort_points(&mut points);
        Self {
            ambient: Ambient::Log,
            points,
        }
    }

    pub fn polytope_space(mut points: Vec<[f64; 2]>) -> Self {
        sort_points(&mut points);
        Self {
            ambient: Ambient::Polytope,
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn sort_points(points: &mut [[f64; 2]]) {
    points.sort_by(|a, b| {
        a[0].partial_cmp(&b[0])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a[1].partial_cmp(&b[1]).unwrap_or(std::cmp::Ordering::Equal))
    });
}

/// μ_S(x) = Σ s·|x^s| / Σ |x^s| evaluated stably through u = Log|x|.
pub fn moment_map(support: &[Vec<i64>], x: &[Complex64]) -> Result<Vec<f64>> {
    let u = log_moduli(x)?;
    Ok(moment_map_log(support, &u))
}

/// μ_S through u = Log|x| directly: softmax weights on logits ⟨s, u⟩.
pub fn moment_map_log(support: &[Vec<i64>], u: &[f64]) -> Vec<f64> {
    let logits: Vec<f64> = support.iter().map(|s| dot(s, u)).collect();
    combine(support, &logits, u.len())
}

/// μ_f(x) = Σ s·|a_s||x^s| / Σ |a_s||x^s|, again through u = Log|x|.
pub fn weighted_moment_map(f: &LaurentPolynomial, x: &[Complex64]) -> Result<Vec<f64>> {
    let u = log_moduli(x)?;
    Ok(weighted_moment_map_log(&f.log_view(1.0), &u))
}

/// μ_{f^[r]} in log scale: logits r·log|a_s| + ⟨s, u⟩ (the r is already in
/// the [`LogPolynomial`]).
pub fn weighted_moment_map_log(lp: &LogPolynomial, u: &[f64]) -> Vec<f64> {
    let support: Vec<&Vec<i64>> = lp.terms.iter().map(|t| &t.exp).collect();
    let logits: Vec<f64> = lp.terms.iter().map(|t| t.log_mod + dot(&t.exp, u)).collect();
    let w = softmax_weights(&logits);
    let mut out = vec![0.0; u.len()];
    for (s, wi) in support.iter().zip(w) {
        for (o, &si) in out.iter_mut().zip(s.iter()) {
            *o += wi * si as f64;
        }
    }
    out
}

fn dot(s: &[i64], u: &[f64]) -> f64 {
    s.iter().zip(u).map(|(&a, &b)| a as f64 * b).sum()
}

fn combine(support: &[Vec<i64>], logits: &[f64], n: usize) -> Vec<f64> {
    let w = softmax_weights(logits);
    let mut out = vec![0.0; n];
    for (s, wi) in support.iter().zip(w) {
        for (o, &si) in out.iter_mut().zip(s.iter()) {
            *o += wi * si as f64;
        }
    }
    out
}

fn log_moduli(x: &[Complex64]) -> Result<Vec<f64>> {
    x.iter()
        .enumerate()
        .map(|(i, z)| {
            let n = z.norm();
            if n == 0.0 {
                Err(Error::ZeroCoordinate { index: i })
            } else {
                Ok(n.ln())
            }
        })
        .collect()
}

/// Sampling knobs for the moment-image pipelines. `window` and `slices`
/// default to automatic choices scaled to the polynomial at hand.
#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    pub window: Option<Window>,
    pub slices: Option<usize>,
    pub thetas: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        Self {
            window: None,
            slices: None,
            thetas: 64,
        }
    }
}

/// Padding used for moment-image windows: wider than the amoeba default so
/// the image reaches close to the Newton polytope boundary (leakage decays
/// like e^(-pad)).
const MOMENT_PAD: f64 = 5.0;
/// Target spacing of pinned-coordinate slices in log units.
const SLICE_SPACING: f64 = 0.25;

fn effective_window(lp: &LogPolynomial, opts: &SampleOptions) -> Result<Window> {
    match opts.window {
        Some(w) => Ok(w),
        None => auto_window_log(lp, MOMENT_PAD),
    }
}

fn effective_slices(window: &Window, opts: &SampleOptions) -> usize {
    match opts.slices {
        Some(s) => s,
        None => {
            let span = window.width().max(window.height());
            ((span / SLICE_SPACING).ceil() as usize).clamp(64, 2400)
        }
    }
}

fn moment_image(lp: &LogPolynomial, opts: &SampleOptions) -> Result<PointCloud> {
    let window = effective_window(lp, opts)?;
    let slices = effective_slices(&window, opts);
    let samples = sample_zero_set(lp, &window, slices, opts.thetas)?;
    if samples.is_empty() {
        return Err(Error::NoSamples);
    }
    let pts: Vec<[f64; 2]> = exec::map_slice(&samples, |s| {
        let m = weighted_moment_map_log(lp, &s.u);
        [m[0], m[1]]
    });
    Ok(PointCloud::polytope_space(pts))
}

/// Compactified amoeba: μ_S over sampled zero-set points. The image lies in
/// the Newton polytope.
pub fn compactified_amoeba(f: &LaurentPolynomial, opts: &SampleOptions) -> Result<PointCloud> {
    if f.dimension() != 2 {
        return Err(Error::UnsupportedDimension(f.dimension()));
    }
    // the zero set is sampled with the true coefficients; only the moment
    // map itself ignores their moduli
    let lp = f.log_view(1.0);
    let window = effective_window(&lp, opts)?;
    let slices = effective_slices(&window, opts);
    let samples = sample_zero_set(&lp, &window, slices, opts.thetas)?;
    if samples.is_empty() {
        return Err(Error::NoSamples);
    }
    let support = f.support_vec();
    let pts: Vec<[f64; 2]> = exec::map_slice(&samples, |s| {
        let m = moment_map_log(&support, &s.u);
        [m[0], m[1]]
    });
    Ok(PointCloud::polytope_space(pts))
}

/// Weighted compactified amoeba of the r-th Hadamard power, WCA(f^[r]).
/// Everything (fiber coefficients, root moduli, moment weights) is carried
/// in log scale, so arbitrarily large r cannot overflow.
pub fn wca(f: &LaurentPolynomial, r: f64, opts: &SampleOptions) -> Result<PointCloud> {
    if f.dimension() != 2 {
        return Err(Error::UnsupportedDimension(f.dimension()));
    }
    if !(r >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Hadamard exponent must be >= 1, got {r}"
        )));
    }
    let lp = f.log_view(r);
    moment_image(&lp, opts)
}
