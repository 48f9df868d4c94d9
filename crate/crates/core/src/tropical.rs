//! Tropical polynomials, their corner locus in the plane, and the duality
//! with the regular subdivision of the Newton polytope.
//!
//! The curve is constructed *from* the subdivision rather than by plane
//! sweeps: the facet over a maximal cell has a supporting plane z = ⟨c,α⟩+d,
//! and the affine forms of that cell's exponents all tie exactly at ζ = −c,
//! which is therefore the dual curve vertex. This makes curve/subdivision
//! duality hold by construction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, LogPolynomial};
use crate::subdivision::{regular_subdivision, RegularSubdivision, HEIGHT_TOL};

#[derive(Clone, Debug)]
pub struct TropicalPolynomial {
    n: usize,
    exponents: Vec<Vec<i64>>,
    heights: Vec<f64>,
}

impl TropicalPolynomial {
    pub fn from_parts(exponents: Vec<Vec<i64>>, heights: Vec<f64>) -> Result<Self> {
        if exponents.is_empty() || exponents.len() != heights.len() {
            return Err(Error::InvalidArgument(
                "exponents and heights must be nonempty and of equal length".into(),
            ));
        }
        let n = exponents[0].len();
        for e in &exponents {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
        }
        let mut sorted = exponents.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != exponents.len() {
            return Err(Error::InvalidArgument("exponents must be distinct".into()));
        }
        Ok(Self {
            n,
            exponents,
            heights,
        })
    }

    /// Heights are log-moduli of the coefficients.
    pub fn from_polynomial(f: &LaurentPolynomial) -> Self {
        let exponents = f.support_vec();
        let heights = exponents
            .iter()
            .map(|e| f.coefficient(e).unwrap().norm().ln())
            .collect();
        Self {
            n: f.dimension(),
            exponents,
            heights,
        }
    }

    pub fn from_log(lp: &LogPolynomial) -> Self {
        Self {
            n: lp.n,
            exponents: lp.exponents(),
            heights: lp.heights(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    /// max over i of hᵢ + ⟨αᵢ, ζ⟩ together with the indices attaining the
    /// maximum within the shared tie tolerance.
    pub fn eval(&self, zeta: &[f64]) -> (f64, Vec<usize>) {
        let mut best = f64::NEG_INFINITY;
        let values: Vec<f64> = self
            .exponents
            .iter()
            .zip(&self.heights)
            .map(|(e, &h)| {
                let v = h + e.iter().zip(zeta).map(|(&a, &z)| a as f64 * z).sum::<f64>();
                if v > best {
                    best = v;
                }
                v
            })
            .collect();
        let argmax = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| best - v <= HEIGHT_TOL)
            .map(|(i, _)| i)
            .collect();
        (best, argmax)
    }

    pub fn subdivision(&self) -> Result<RegularSubdivision> {
        regular_subdivision(&self.exponents, &self.heights)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveEdge {
    /// Endpoint indices into `TropicalCurve::vertices`.
    pub ends: (usize, usize),
    /// Primitive integer direction from `ends.0` toward `ends.1`.
    pub dir: [i64; 2],
    /// Endpoints of the dual subdivision edge.
    pub dual: (Vec<i64>, Vec<i64>),
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveRay {
    pub vertex: usize,
    pub dir: [i64; 2],
    pub dual: (Vec<i64>, Vec<i64>),
}

/// The corner locus of a 2D tropical polynomial, dual to the regular
/// subdivision: one vertex per maximal cell, one bounded edge per interior
/// subdivision edge, one ray per boundary subdivision edge.
#[derive(Clone, Debug, Serialize)]
pub struct TropicalCurve {
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
}

impl TropicalCurve {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Axis-aligned bounding box of the curve vertices; `None` when empty.
    pub fn vertex_bbox(&self) -> Option<([f64; 2], [f64; 2])> {
        if self.vertices.is_empty() {
            return None;
        }
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo[0] = lo[0].min(v[0]);
            lo[1] = lo[1].min(v[1]);
            hi[0] = hi[0].max(v[0]);
            hi[1] = hi[1].max(v[1]);
        }
        Some((lo, hi))
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

fn primitive(v: [i64; 2]) -> [i64; 2] {
    let g = gcd64(v[0], v[1]);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g]
    }
}

/// Corner locus of a 2D tropical polynomial. A single exponent has an empty
/// curve; exponents spanning only a line are rejected (the locus would be a
/// line arrangement, not a graph).
pub fn tropical_curve_2d(t: &TropicalPolynomial) -> Result<TropicalCurve> {
    if t.dimension() != 2 {
        return Err(Error::UnsupportedDimension(t.dimension()));
    }
    if t.exponents().len() == 1 {
        return Ok(TropicalCurve {
            vertices: Vec::new(),
            edges: Vec::new(),
            rays: Vec::new(),
        });
    }
    let sub = t.subdivision()?;
    curve_from_subdivision(&sub)
}

pub(crate) fn curve_from_subdivision(sub: &RegularSubdivision) -> Result<TropicalCurve> {
    let mut vertices: Vec<[f64; 2]> = Vec::new();
    for i in 0..sub.cells().len() {
        let (c, _) = sub.plane(i);
        vertices.push([-c[0], -c[1]]);
    }

    // ring edges per cell, with the traversal direction retained
    struct RingEdge {
        cell: usize,
        a: Vec<i64>,
        b: Vec<i64>,
    }
    let mut ring_edges: Vec<RingEdge> = Vec::new();
    for (ci, cell) in sub.cells().iter().enumerate() {
        let ring = cell.vertices();
        for i in 0..ring.len() {
            ring_edges.push(RingEdge {
                cell: ci,
                a: ring[i].clone(),
                b: ring[(i + 1) % ring.len()].clone(),
            });
        }
    }

    let key = |a: &Vec<i64>, b: &Vec<i64>| -> (Vec<i64>, Vec<i64>) {
        if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    };
    let mut by_key: std::collections::BTreeMap<(Vec<i64>, Vec<i64>), Vec<usize>> =
        std::collections::BTreeMap::new();
    for (i, e) in ring_edges.iter().enumerate() {
        by_key.entry(key(&e.a, &e.b)).or_default().push(i);
    }

    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for (k, idxs) in &by_key {
        match idxs.as_slice() {
            [single] => {
                let e = &ring_edges[*single];
                let v = [e.b[0] - e.a[0], e.b[1] - e.a[1]];
                // outward normal of a counterclockwise ring edge
                let dir = primitive([v[1], -v[0]]);
                rays.push(CurveRay {
                    vertex: e.cell,
                    dir,
                    dual: k.clone(),
                });
            }
            [first, second] => {
                let e = &ring_edges[*first];
                let cell_a = e.cell;
                let cell_b = ring_edges[*second].cell;
                let v = [e.b[0] - e.a[0], e.b[1] - e.a[1]];
                // from cell_a's side the neighbor vertex lies across the
                // shared edge, in its outward direction
                let dir = primitive([v[1], -v[0]]);
                edges.push(CurveEdge {
                    ends: (cell_a, cell_b),
                    dir,
                    dual: k.clone(),
                });
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "subdivision edge shared by more than two cells".into(),
                ))
            }
        }
    }

    Ok(TropicalCurve {
        vertices,
        edges,
        rays,
    })
}

/// Exponents whose pointwise-unique argmax region is nonempty; these are
/// exactly the used vertices of the dual regular subdivision, and by the
/// order map they are the orders realized tropically.
pub fn tropical_orders(t: &TropicalPolynomial) -> Result<Vec<Vec<i64>>> {
    if t.dimension() != 2 {
        return Err(Error::UnsupportedDimension(t.dimension()));
    }
    if t.exponents().len() == 1 {
        return Ok(vec![t.exponents()[0].clone()]);
    }
    let sub = t.subdivision()?;
    Ok(sub.used_vertices().to_vec())
}
