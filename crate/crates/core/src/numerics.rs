//! Shared numerical utilities: stable log-sum-exp and softmax, Hausdorff
//! distance between planar point clouds, and concave margin maximization
//! (the lopsidedness search used to certify amoeba-complement components).

use crate::error::{Error, Result};
use crate::exec;
use crate::poly::LaurentPolynomial;

/// log Σ exp(λᵢ), stable for any finite logits.
pub fn log_sum_exp(logits: &[f64]) -> f64 {
    let m = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let s: f64 = logits.iter().map(|&l| (l - m).exp()).sum();
    m + s.ln()
}

/// Softmax weights wᵢ = exp(λᵢ − max)/Σ exp(λⱼ − max); sums to 1 and never
/// overflows. Shift-invariant in the logits.
pub fn softmax_weights(logits: &[f64]) -> Vec<f64> {
    if logits.is_empty() {
        return Vec::new();
    }
    let m = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|&l| (l - m).exp()).collect();
    let total: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / total).collect()
}

// --- Hausdorff distance -----------------------------------------------------

/// Uniform-grid index over a point cloud for nearest-neighbor queries.
pub(crate) struct PointGrid {
    cell: f64,
    origin: [f64; 2],
    dims: [i64; 2],
    buckets: std::collections::HashMap<(i64, i64), Vec<u32>>,
    points: Vec<[f64; 2]>,
}

impl PointGrid {
    pub(crate) fn build(points: &[[f64; 2]]) -> Self {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in points {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
        let cell = (span / (points.len() as f64).sqrt().max(1.0)).max(span * 1e-6);
        let mut buckets: std::collections::HashMap<(i64, i64), Vec<u32>> =
            std::collections::HashMap::new();
        for (i, p) in points.iter().enumerate() {
            let cx = ((p[0] - lo[0]) / cell).floor() as i64;
            let cy = ((p[1] - lo[1]) / cell).floor() as i64;
            buckets.entry((cx, cy)).or_default().push(i as u32);
        }
        let dims = [
            ((hi[0] - lo[0]) / cell).floor() as i64 + 1,
            ((hi[1] - lo[1]) / cell).floor() as i64 + 1,
        ];
        Self {
            cell,
            origin: lo,
            dims,
            buckets,
            points: points.to_vec(),
        }
    }

    /// Distance from `p` to the nearest stored point. Expanding ring search
    /// around the query cell clamped into the grid: for any stored q,
    /// d(p, q) ≥ d(proj(p), q) with proj the projection onto the grid box,
    /// so rings around the clamped cell still lower-bound correctly.
    pub(crate) fn nearest_distance(&self, p: [f64; 2]) -> f64 {
        let cx = (((p[0] - self.origin[0]) / self.cell).floor() as i64).clamp(0, self.dims[0] - 1);
        let cy = (((p[1] - self.origin[1]) / self.cell).floor() as i64).clamp(0, self.dims[1] - 1);
        let max_ring = self.dims[0] + self.dims[1] + 2;
        let mut best = f64::INFINITY;
        for ring in 0..=max_ring {
            if best.is_finite() && (ring - 1) as f64 * self.cell > best {
                break;
            }
            let mut visit = |qx: i64, qy: i64| {
                if let Some(idx) = self.buckets.get(&(qx, qy)) {
                    for &i in idx {
                        let q = self.points[i as usize];
                        let d = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
                        if d < best {
                            best = d;
                        }
                    }
                }
            };
            if ring == 0 {
                visit(cx, cy);
            } else {
                for dx in -ring..=ring {
                    visit(cx + dx, cy - ring);
                    visit(cx + dx, cy + ring);
                }
                for dy in (-ring + 1)..ring {
                    visit(cx - ring, cy + dy);
                    visit(cx + ring, cy + dy);
                }
            }
        }
        best
    }
}

/// Directed Hausdorff distance sup_{a∈A} d(a, B).
pub fn directed_hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyCloud);
    }
    let grid = PointGrid::build(b);
    Ok(exec::max_over(a, |p| grid.nearest_distance(*p)))
}

/// Symmetric Hausdorff distance max{h(A,B), h(B,A)} in the Euclidean metric.
pub fn hausdorff_distance(a: &[[f64; 2]], b: &[[f64; 2]]) -> Result<f64> {
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}

// --- margin maximization ----------------------------------------------------

/// The concave lopsidedness objective for a distinguished exponent α:
/// g(u) = log|a_α| + ⟨α,u⟩ − log Σ_{β≠α} exp(log|a_β| + ⟨β,u⟩).
/// g(u) > 0 certifies that u lies in an amoeba-complement component of
/// order α.
pub struct MarginObjective {
    alpha: Vec<i64>,
    alpha_logit: f64,
    others: Vec<(Vec<i64>, f64)>,
}

impl MarginObjective {
    pub fn new(f: &LaurentPolynomial, alpha: &[i64]) -> Result<Self> {
        let Some(ca) = f.coefficient(alpha) else {
            return Err(Error::NotInSupport(alpha.to_vec()));
        };
        if f.num_terms() < 2 {
            return Err(Error::InvalidArgument(
                "margin objective needs at least two terms".into(),
            ));
        }
        let others = f
            .terms()
            .filter(|(e, _)| *e != alpha)
            .map(|(e, c)| (e.to_vec(), c.norm().ln()))
            .collect();
        Ok(Self {
            alpha: alpha.to_vec(),
            alpha_logit: ca.norm().ln(),
            others,
        })
    }

    pub fn value(&self, u: &[f64]) -> f64 {
        let dot =
            |e: &[i64]| -> f64 { e.iter().zip(u).map(|(&a, &x)| a as f64 * x).sum::<f64>() };
        let logits: Vec<f64> = self.others.iter().map(|(e, l)| l + dot(e)).collect();
        self.alpha_logit + dot(&self.alpha) - log_sum_exp(&logits)
    }

    pub fn gradient(&self, u: &[f64]) -> Vec<f64> {
        let dot =
            |e: &[i64]| -> f64 { e.iter().zip(u).map(|(&a, &x)| a as f64 * x).sum::<f64>() };
        let logits: Vec<f64> = self.others.iter().map(|(e, l)| l + dot(e)).collect();
        let w = softmax_weights(&logits);
        let mut g: Vec<f64> = self.alpha.iter().map(|&a| a as f64).collect();
        for ((e, _), wi) in self.others.iter().zip(w) {
            for (gi, &ei) in g.iter_mut().zip(e.iter()) {
                *gi -= wi * ei as f64;
            }
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarginStatus {
    /// Gradient vanished; the returned point is the global maximizer.
    Converged,
    /// g increases without bound; the order is realized by an unbounded
    /// complement component (α is a vertex of the Newton polytope).
    Unbounded,
    /// Iteration cap hit before convergence.
    IterationLimit,
}

#[derive(Clone, Debug)]
pub struct MarginResult {
    pub point: Vec<f64>,
    pub margin: f64,
    pub status: MarginStatus,
}

const MARGIN_MAX_ITER: usize = 500;
const MARGIN_NORM_ESCAPE: f64 = 1e3;

/// Gradient ascent with Armijo backtracking on the concave objective g.
/// Returns the maximizer, or an unbounded certificate when g grows past the
/// escape radius.
pub fn maximize_margin(
    f: &LaurentPolynomial,
    alpha: &[i64],
    start: &[f64],
) -> Result<MarginResult> {
    let obj = MarginObjective::new(f, alpha)?;
    let n = f.dimension();
    if start.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: start.len(),
        });
    }
    let mut u = start.to_vec();
    let mut g = obj.value(&u);
    let g0 = g;
    let mut step = 1.0f64;
    for _ in 0..MARGIN_MAX_ITER {
        let grad = obj.gradient(&u);
        let grad_norm2: f64 = grad.iter().map(|x| x * x).sum();
        if grad_norm2.sqrt() <= 1e-10 {
            return Ok(MarginResult {
                point: u,
                margin: g,
                status: MarginStatus::Converged,
            });
        }
        let norm: f64 = u.iter().map(|x| x * x).sum::<f64>();
        if norm.sqrt() > MARGIN_NORM_ESCAPE && g > g0 {
            return Ok(MarginResult {
                point: u,
                margin: g,
                status: MarginStatus::Unbounded,
            });
        }
        // backtracking line search along the gradient
        let mut s = step;
        let mut accepted = false;
        while s > 1e-16 {
            let cand: Vec<f64> = u.iter().zip(&grad).map(|(x, d)| x + s * d).collect();
            let gc = obj.value(&cand);
            if gc >= g + 1e-4 * s * grad_norm2 {
                u = cand;
                g = gc;
                step = (s * 2.0).min(64.0);
                accepted = true;
                break;
            }
            s *= 0.5;
        }
        if !accepted {
            return Ok(MarginResult {
                point: u,
                margin: g,
                status: MarginStatus::Converged,
            });
        }
    }
    Ok(MarginResult {
        point: u,
        margin: g,
        status: MarginStatus::IterationLimit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn softmax_basics() {
        assert_eq!(softmax_weights(&[0.0, 0.0]), vec![0.5, 0.5]);
        let w = softmax_weights(&[1000.0, 0.0]);
        assert!((w[0] - 1.0).abs() < 1e-300);
        assert!(w[1] < 1e-300);
        assert!(w.iter().all(|x| x.is_finite()));
        // shift invariance
        let a = softmax_weights(&[0.3, -1.2, 4.0]);
        let b = softmax_weights(&[100.3, 98.8, 104.0]);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-15);
        }
        let sum: f64 = a.iter().sum();
        assert!((sum - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hausdorff_hand_cases() {
        let a = vec![[0.0, 0.0]];
        let b = vec![[3.0, 4.0]];
        assert!((hausdorff_distance(&a, &b).unwrap() - 5.0).abs() < 1e-12);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);

        // A ⊂ B: symmetric distance equals the one-sided sup over B \ A
        let a = vec![[0.0, 0.0], [1.0, 0.0]];
        let b = vec![[0.0, 0.0], [1.0, 0.0], [2.5, 0.0]];
        let d = hausdorff_distance(&a, &b).unwrap();
        assert!((d - 1.5).abs() < 1e-12);
        assert!((directed_hausdorff(&a, &b).unwrap() - 0.0).abs() < 1e-12);

        assert!(matches!(
            hausdorff_distance(&[], &b),
            Err(Error::EmptyCloud)
        ));
    }

    #[test]
    fn grid_matches_brute_force() {
        // deterministic pseudo-random clouds
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..5 {
            let a: Vec<[f64; 2]> = (0..180)
                .map(|_| [next() * 10.0 - 5.0, next() * 6.0 - 3.0])
                .collect();
            let b: Vec<[f64; 2]> = (0..140)
                .map(|_| [next() * 10.0 - 5.0, next() * 6.0 - 3.0])
                .collect();
            let brute = a
                .iter()
                .map(|p| {
                    b.iter()
                        .map(|q| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt())
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0f64, f64::max)
                .max(
                    b.iter()
                        .map(|p| {
                            a.iter()
                                .map(|q| {
                                    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
                                })
                                .fold(f64::INFINITY, f64::min)
                        })
                        .fold(0.0f64, f64::max),
                );
            let fast = hausdorff_distance(&a, &b).unwrap();
            assert!((brute - fast).abs() < 1e-12, "{} vs {}", brute, fast);
        }
    }

    #[test]
    fn margin_dominant_constant_regime() {
        let f = parse_polynomial("1 + x + y").unwrap();
        let obj = MarginObjective::new(&f, &[0, 0]).unwrap();
        let g = obj.value(&[-10.0, -10.0]);
        assert!((g - (10.0 - 2.0f64.ln())).abs() < 1e-9);
        // the ascent direction from the origin is (-1,-1)/2
        let grad = obj.gradient(&[0.0, 0.0]);
        assert!((grad[0] + 0.5).abs() < 1e-12 && (grad[1] + 0.5).abs() < 1e-12);
        // constant term is a vertex: ascent certifies an unbounded margin
        let res = maximize_margin(&f, &[0, 0], &[0.0, 0.0]).unwrap();
        assert_eq!(res.status, MarginStatus::Unbounded);
        assert!(res.margin > 0.0);
    }

    #[test]
    fn margin_vertex_exponent_is_unbounded() {
        let f = parse_polynomial("1 + x + y").unwrap();
        let res = maximize_margin(&f, &[1, 0], &[0.0, 0.0]).unwrap();
        assert_eq!(res.status, MarginStatus::Unbounded);
    }

    #[test]
    fn margin_interior_lopsided_case() {
        // coefficient 30 dominates at the origin
        let f = parse_polynomial("x + 30*x*y + 20*x^2*y + x^3*y + y^2").unwrap();
        let res = maximize_margin(&f, &[1, 1], &[0.0, 0.0]).unwrap();
        assert_eq!(res.status, MarginStatus::Converged);
        assert!(res.margin > 0.0, "margin {}", res.margin);
    }

    #[test]
    fn margin_not_in_support_is_an_error() {
        let f = parse_polynomial("1 + 3*x + 3*y + x^2*y + 4*x^3*y + x*y^2 + 10*x^2*y^2 + 4*x*y^3")
            .unwrap();
        assert!(matches!(
            maximize_margin(&f, &[1, 1], &[0.0, 0.0]),
            Err(Error::NotInSupport(_))
        ));
    }

    #[test]
    fn margin_gradient_matches_finite_differences() {
        let f = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let obj = MarginObjective::new(&f, &[1, 1]).unwrap();
        let h = 1e-6;
        for u in [[0.0, 0.0], [0.7, -1.3], [-2.0, 0.4], [1.5, 1.5]] {
            let grad = obj.gradient(&u);
            for i in 0..2 {
                let mut up = u;
                let mut dn = u;
                up[i] += h;
                dn[i] -= h;
                let fd = (obj.value(&up) - obj.value(&dn)) / (2.0 * h);
                assert!(
                    (grad[i] - fd).abs() < 1e-6,
                    "grad {} vs fd {} at {:?}",
                    grad[i],
                    fd,
                    u
                );
            }
        }
    }

    #[test]
    fn margin_objective_is_concave() {
        let f = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let obj = MarginObjective::new(&f, &[1, 1]).unwrap();
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..1000 {
            let u = [next() * 8.0 - 4.0, next() * 8.0 - 4.0];
            let v = [next() * 8.0 - 4.0, next() * 8.0 - 4.0];
            let t = next();
            let mid = [t * u[0] + (1.0 - t) * v[0], t * u[1] + (1.0 - t) * v[1]];
            let lhs = obj.value(&mid);
            let rhs = t * obj.value(&u) + (1.0 - t) * obj.value(&v);
            assert!(lhs >= rhs - 1e-9, "concavity violated: {} < {}", lhs, rhs);
        }
    }
}
