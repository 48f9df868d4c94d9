//! Complex univariate root finding by simultaneous (Aberth-class) iteration.
//!
//! Two entry points. [`roots`] solves polynomials whose coefficients fit in
//! f64. [`solve_log_poly`] solves polynomials whose coefficients are carried
//! as (log-modulus, phase) pairs: it splits the degree range along the
//! coefficient Newton polygon, recenters each scale window so its roots are
//! O(1), solves the windows independently, and reports roots in log-polar
//! form. Fiber polynomials of high Hadamard powers have root moduli far
//! outside the f64 range, which only this representation can express.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_ITER: u32 = 200;

/// All roots of a polynomial, with multiplicity; `residual_bound` is the
/// largest |p(root)| over the max-modulus-normalized coefficients divided by
/// (degree + 1).
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residual_bound: f64,
    pub converged: bool,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Core Aberth–Ehrlich sweep with caller-provided initial guesses.
fn aberth(coeffs: &[Complex64], guesses: &mut [Complex64], tol: f64) -> (bool, u32) {
    let d = guesses.len();
    if d == 0 {
        return (true, 0);
    }
    for iter in 0..MAX_ITER {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let z = guesses[k];
            if !z.re.is_finite() || !z.im.is_finite() {
                // re-seed a runaway iterate inside the current cloud
                guesses[k] = guesses[(k + 1) % d] * Complex64::from_polar(1.0, 0.5)
                    + Complex64::new(1e-3, 1e-3);
                max_step = f64::INFINITY;
                continue;
            }
            let (p, dp) = horner(coeffs, z);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in guesses.iter().enumerate() {
                if j != k {
                    let diff = z - zj;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let w = if denom.norm() == 0.0 { newton } else { newton / denom };
            guesses[k] = z - w;
            let rel = w.norm() / (1.0 + guesses[k].norm());
            if rel > max_step {
                max_step = rel;
            }
        }
        if max_step <= tol {
            return (true, iter + 1);
        }
    }
    (false, MAX_ITER)
}

/// All complex roots of Σ cₖ yᵏ (coefficients in ascending order) via
/// simultaneous iteration. Leading coefficients within 1e-14 of zero
/// (relative to the largest modulus) are trimmed first; the remaining
/// polynomial must have degree ≥ 1. Deterministic: initial guesses sit on a
/// circle of radius 1 + max|cₖ/c_d|. On hitting the iteration cap the best
/// iterate is returned with `converged = false`.
pub fn roots(coeffs: &[Complex64], tol: f64) -> Result<RootSet> {
    let max_mod = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max_mod == 0.0 || coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let trim = 1e-14 * max_mod;
    let mut deg = coeffs.len() - 1;
    while deg > 0 && coeffs[deg].norm() <= trim {
        deg -= 1;
    }
    if deg == 0 {
        return Err(Error::DegreeZero);
    }
    let normed: Vec<Complex64> = coeffs[..=deg].iter().map(|c| c / max_mod).collect();

    let lead = normed[deg];
    let radius = 1.0
        + normed[..deg]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0f64, f64::max);
    let mut guesses: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / deg as f64 + 0.7;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let (converged, _) = aberth(&normed, &mut guesses, tol);
    let residual_bound = guesses
        .iter()
        .map(|&z| horner(&normed, z).0.norm())
        .fold(0.0f64, f64::max)
        / (deg as f64 + 1.0);
    guesses.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(RootSet {
        roots: guesses,
        residual_bound,
        converged,
    })
}

// --- log-scale solver --------------------------------------------------------

/// A nonzero complex number stored as (log of modulus, argument).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex {
    pub ln_mod: f64,
    pub arg: f64,
}

impl LogComplex {
    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.ln_mod.exp(), self.arg)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct FiberRoots {
    pub roots: Vec<LogComplex>,
    /// False when a window solve lost a root or failed to converge.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug)]
struct HullEdge {
    k_lo: usize,
    k_hi: usize,
    /// Tropical root log-modulus for this edge (negated hull slope).
    t: f64,
}

/// Tropical root scales: the upper-hull edges of (k, log|cₖ|).
fn newton_polygon(coeffs: &[Option<(f64, f64)>]) -> Vec<HullEdge> {
    let present: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(k, c)| c.map(|(l, _)| (k, l)))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(k, l) in &present {
        while hull.len() >= 2 {
            let (k1, l1) = hull[hull.len() - 2];
            let (k2, l2) = hull[hull.len() - 1];
            let cross = (k2 - k1) as f64 * (l - l1) - (l2 - l1) * (k - k1) as f64;
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((k, l));
    }
    hull.windows(2)
        .map(|w| HullEdge {
            k_lo: w[0].0,
            k_hi: w[1].0,
            t: (w[0].1 - w[1].1) / (w[1].0 - w[0].0) as f64,
        })
        .collect()
}

/// Scale gap (in log units) beyond which windows separate cleanly; the
/// neglected cross-window coupling is then below e^{-40}.
const WINDOW_GAP: f64 = 40.0;
/// Budget keeping every Horner evaluation inside the f64 exponent range.
const EXP_BUDGET: f64 = 650.0;

fn solve_window(
    coeffs: &[Option<(f64, f64)>],
    edges: &[HullEdge],
    tol: f64,
    out: &mut Vec<LogComplex>,
) -> bool {
    let k_lo = edges[0].k_lo;
    let k_hi = edges[edges.len() - 1].k_hi;
    let t_lo = edges[0].t;
    let t_hi = edges[edges.len() - 1].t;
    let width = k_hi - k_lo;
    let radius = (t_hi - t_lo) / 2.0;
    if edges.len() > 1 && (radius + 12.0) * width as f64 > EXP_BUDGET {
        // recenter cannot hold the whole window: split at the widest scale gap
        let split = (1..edges.len())
            .max_by(|&a, &b| {
                let ga = edges[a].t - edges[a - 1].t;
                let gb = edges[b].t - edges[b - 1].t;
                ga.partial_cmp(&gb).unwrap()
            })
            .unwrap();
        let ok1 = solve_window(coeffs, &edges[..split], tol, out);
        let ok2 = solve_window(coeffs, &edges[split..], tol, out);
        return ok1 && ok2;
    }

    let v = (t_lo + t_hi) / 2.0;
    let scale_max = (k_lo..=k_hi)
        .filter_map(|k| coeffs[k].map(|(l, _)| l + k as f64 * v))
        .fold(f64::NEG_INFINITY, f64::max);
    let window: Vec<Complex64> = (k_lo..=k_hi)
        .map(|k| match coeffs[k] {
            Some((l, phase)) => {
                Complex64::from_polar((l + k as f64 * v - scale_max).exp(), phase)
            }
            None => Complex64::new(0.0, 0.0),
        })
        .collect();

    // initial guesses on the tropical circles of the window
    let mut guesses: Vec<Complex64> = Vec::with_capacity(width);
    for (ei, e) in edges.iter().enumerate() {
        let m = e.k_hi - e.k_lo;
        let r = (e.t - v).exp();
        for j in 0..m {
            let angle = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / m as f64
                + 0.7
                + 0.37 * ei as f64;
            guesses.push(Complex64::from_polar(r, angle));
        }
    }
    let (converged, _) = aberth(&window, &mut guesses, tol);
    let mut ok = converged;
    for z in guesses {
        if z.re.is_finite() && z.im.is_finite() && z.norm() > 0.0 {
            out.push(LogComplex {
                ln_mod: v + z.norm().ln(),
                arg: z.arg(),
            });
        } else {
            ok = false;
        }
    }
    ok
}

/// Roots of Σ cₖ yᵏ where cₖ is given in log-polar form (`None` marks a zero
/// coefficient). Both end coefficients must be present; the caller trims
/// first. Splits along the Newton polygon so that arbitrarily wide
/// coefficient ranges are handled; each window contributes exactly
/// (its lattice width) roots.
pub(crate) fn solve_log_poly(coeffs: &[Option<(f64, f64)>], tol: f64) -> FiberRoots {
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return FiberRoots {
            roots: Vec::new(),
            complete: true,
        };
    }
    debug_assert!(coeffs[0].is_some() && coeffs[d].is_some());
    let edges = newton_polygon(coeffs);
    let mut roots = Vec::with_capacity(d);
    let mut complete = true;
    let mut start = 0usize;
    for i in 1..=edges.len() {
        let boundary = i == edges.len() || edges[i].t - edges[i - 1].t >= WINDOW_GAP;
        if boundary {
            complete &= solve_window(coeffs, &edges[start..i], tol, &mut roots);
            start = i;
        }
    }
    complete &= roots.len() == d;
    FiberRoots { roots, complete }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn quadratics() {
        let r = roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.roots[0] - c(-1.0, 0.0)).norm() < 1e-10);
        assert!((r.roots[1] - c(1.0, 0.0)).norm() < 1e-10);

        let r = roots(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 1e-12).unwrap();
        assert!((r.roots[0] - c(0.0, -1.0)).norm() < 1e-10);
        assert!((r.roots[1] - c(0.0, 1.0)).norm() < 1e-10);
    }

    #[test]
    fn clustered_triple_root() {
        // (y-2)^3 = -8 + 12y - 6y^2 + y^3
        let r = roots(
            &[c(-8.0, 0.0), c(12.0, 0.0), c(-6.0, 0.0), c(1.0, 0.0)],
            1e-12,
        )
        .unwrap();
        assert_eq!(r.roots.len(), 3);
        for z in &r.roots {
            assert!((z - c(2.0, 0.0)).norm() < 1e-4, "root {} too far", z);
        }
    }

    #[test]
    fn vieta_checks_on_a_random_polynomial() {
        let coeffs = vec![
            c(0.3, -1.1),
            c(2.0, 0.4),
            c(-1.5, 0.9),
            c(0.7, 0.7),
            c(1.0, -0.2),
        ];
        let d = coeffs.len() - 1;
        let r = roots(&coeffs, 1e-12).unwrap();
        assert!(r.converged);
        let sum: Complex64 = r.roots.iter().sum();
        let expect_sum = -coeffs[d - 1] / coeffs[d];
        assert!((sum - expect_sum).norm() / expect_sum.norm() < 1e-6);
        let prod: Complex64 = r.roots.iter().product();
        let expect_prod =
            coeffs[0] / coeffs[d] * if d % 2 == 1 { -1.0 } else { 1.0 };
        assert!((prod - expect_prod).norm() / expect_prod.norm() < 1e-6);
    }

    #[test]
    fn residual_invariant_holds() {
        let coeffs = vec![c(1.0, 0.0), c(-3.0, 2.0), c(0.5, 0.0), c(2.0, -1.0)];
        let max_mod = coeffs.iter().map(|x| x.norm()).fold(0.0f64, f64::max);
        let r = roots(&coeffs, 1e-12).unwrap();
        for z in &r.roots {
            let p: Complex64 = coeffs
                .iter()
                .rev()
                .fold(c(0.0, 0.0), |acc, &ck| acc * z + ck);
            assert!(p.norm() <= r.residual_bound * max_mod * (coeffs.len() as f64) + 1e-12);
        }
    }

    #[test]
    fn trims_leading_noise_and_rejects_zero() {
        let r = roots(&[c(-1.0, 0.0), c(1.0, 0.0), c(1e-20, 0.0)], 1e-12).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0] - c(1.0, 0.0)).norm() < 1e-10);

        assert!(matches!(
            roots(&[c(0.0, 0.0), c(0.0, 0.0)], 1e-12),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            roots(&[c(5.0, 0.0)], 1e-12),
            Err(Error::DegreeZero)
        ));
    }

    #[test]
    fn log_solver_matches_plain_solver_on_moderate_input() {
        // y^3 - 2y + 1: roots 1, (-1±√5)/2
        let coeffs = vec![c(1.0, 0.0), c(-2.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let plain = roots(&coeffs, 1e-12).unwrap();
        let logform: Vec<Option<(f64, f64)>> = coeffs
            .iter()
            .map(|z| {
                if z.norm() == 0.0 {
                    None
                } else {
                    Some((z.norm().ln(), z.arg()))
                }
            })
            .collect();
        let fr = solve_log_poly(&logform, 1e-12);
        assert!(fr.complete);
        let mut got: Vec<Complex64> = fr.roots.iter().map(|r| r.to_complex()).collect();
        got.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (g, p) in got.iter().zip(plain.roots.iter()) {
            assert!((g - p).norm() < 1e-9, "{} vs {}", g, p);
        }
    }

    #[test]
    fn log_solver_handles_huge_scale_spread() {
        // (y - e^300)(y - e^-300) = y^2 - (e^300 + e^-300) y + 1
        let coeffs: Vec<Option<(f64, f64)>> = vec![
            Some((0.0, 0.0)),
            Some((300.0, std::f64::consts::PI)),
            Some((0.0, 0.0)),
        ];
        let fr = solve_log_poly(&coeffs, 1e-12);
        assert!(fr.complete);
        assert_eq!(fr.roots.len(), 2);
        let mut mods: Vec<f64> = fr.roots.iter().map(|r| r.ln_mod).collect();
        mods.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((mods[0] + 300.0).abs() < 1e-9);
        assert!((mods[1] - 300.0).abs() < 1e-9);
        for r in &fr.roots {
            assert!(r.arg.abs() < 1e-9, "roots should be positive real");
        }
    }

    #[test]
    fn log_solver_far_beyond_f64_range() {
        // coefficient log-moduli emulate a Hadamard power r = 256 of
        // 1 + 30 y: root at ln|y| = -256 ln 30 ≈ -870.6, far below f64
        let l30 = 30.0f64.ln();
        let coeffs: Vec<Option<(f64, f64)>> = vec![
            Some((0.0, 0.0)),
            Some((256.0 * l30, std::f64::consts::PI)),
        ];
        let fr = solve_log_poly(&coeffs, 1e-12);
        assert!(fr.complete);
        assert_eq!(fr.roots.len(), 1);
        assert!((fr.roots[0].ln_mod + 256.0 * l30).abs() < 1e-9);
    }

    #[test]
    fn log_solver_counts_by_window() {
        // three scales: roots near e^-100 (x2), e^0, e^+100
        // p(y) = (y^2 - e^-200)(y - 1)(y - e^100) expanded keeps windows apart;
        // build from factored log data instead: coefficients of
        // (y - a)(y + a)(y - 1)(y - b) with a = e^-100, b = e^100:
        // = (y^2 - a^2)(y^2 - (1+b) y + b)
        // c0 = -a^2 b, c1 = a^2 (1+b), c2 = b - a^2, c3 = -(1+b), c4 = 1
        let a2 = -200.0f64; // ln a^2
        let b = 100.0f64; // ln b
        let pi = std::f64::consts::PI;
        let ln_1pb = b + (1.0 + (-b).exp()).ln(); // ln(1+b) computed stably
        let coeffs: Vec<Option<(f64, f64)>> = vec![
            Some((a2 + b, pi)),
            Some((a2 + ln_1pb, 0.0)),
            Some((b + (1.0f64 - (a2 - b).exp()).ln(), 0.0)),
            Some((ln_1pb, pi)),
            Some((0.0, 0.0)),
        ];
        let fr = solve_log_poly(&coeffs, 1e-12);
        assert!(fr.complete);
        assert_eq!(fr.roots.len(), 4);
        let mut mods: Vec<f64> = fr.roots.iter().map(|r| r.ln_mod).collect();
        mods.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((mods[0] + 100.0).abs() < 1e-6);
        assert!((mods[1] + 100.0).abs() < 1e-6);
        assert!(mods[2].abs() < 1e-6);
        assert!((mods[3] - 100.0).abs() < 1e-6);
    }
}
