//! Regular subdivisions induced by lifting lattice points to real heights
//! and projecting the upper-hull facets back down.
//!
//! Heights are logarithms of coefficient moduli, hence inherently inexact:
//! lifted-coplanarity tests use the shared tolerance [`HEIGHT_TOL`], while
//! everything in the projected plane stays in exact integer arithmetic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Cell, LatticePolytope};
use crate::poly::LaurentPolynomial;

/// Coplanarity tolerance for lifted heights, shared with the tropical module
/// so curve/subdivision duality is consistent by construction.
pub const HEIGHT_TOL: f64 = 1e-9;

/// A regular subdivision of a lattice polytope. `cells` are the maximal
/// cells; `used` are the lattice points that appear as a vertex of at least
/// one cell (points lifted strictly below the upper hull are never used).
#[derive(Clone, Debug)]
pub struct RegularSubdivision {
    ambient: LatticePolytope,
    cells: Vec<Cell>,
    planes: Vec<(Vec<f64>, f64)>,
    used: Vec<Vec<i64>>,
    points: Vec<Vec<i64>>,
    heights: Vec<f64>,
}

#[derive(Serialize)]
struct CellJson<'a> {
    vertices: &'a [Vec<i64>],
}

#[derive(Serialize)]
struct SubdivisionJson<'a> {
    cells: Vec<CellJson<'a>>,
}

impl Serialize for RegularSubdivision {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubdivisionJson {
            cells: self
                .cells
                .iter()
                .map(|c| CellJson {
                    vertices: c.vertices(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl RegularSubdivision {
    pub fn ambient(&self) -> &LatticePolytope {
        &self.ambient
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Supporting plane of the lifted facet over cell `i`, as (gradient, offset):
    /// the facet lies in z = ⟨c, α⟩ + d.
    pub fn plane(&self, i: usize) -> (&[f64], f64) {
        (&self.planes[i].0, self.planes[i].1)
    }

    pub fn used_vertices(&self) -> &[Vec<i64>] {
        &self.used
    }

    pub fn input_points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn input_heights(&self) -> &[f64] {
        &self.heights
    }

    /// True iff every maximal cell is a full-dimensional simplex.
    pub fn is_triangulation(&self) -> bool {
        let n = self.ambient.dimension();
        self.cells
            .iter()
            .all(|c| c.is_simplex() && c.affine_dim() == n)
    }

    /// Value of the piecewise-linear upper-hull function at a lattice point
    /// of the ambient polytope.
    pub fn hull_height(&self, p: &[i64]) -> Option<f64> {
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.contains_lattice_point(p) {
                let (c, d) = self.plane(i);
                let v: f64 = c
                    .iter()
                    .zip(p.iter())
                    .map(|(ci, &pi)| ci * pi as f64)
                    .sum::<f64>()
                    + d;
                return Some(v);
            }
        }
        None
    }
}

fn dedupe_lifted(points: &[Vec<i64>], heights: &[f64]) -> (Vec<Vec<i64>>, Vec<f64>) {
    let mut map: BTreeMap<Vec<i64>, f64> = BTreeMap::new();
    for (p, &h) in points.iter().zip(heights.iter()) {
        let e = map.entry(p.clone()).or_insert(f64::NEG_INFINITY);
        if h > *e {
            *e = h;
        }
    }
    map.into_iter().unzip()
}

/// The regular subdivision induced by lifting each point to its height and
/// projecting the upper-hull facets. Requires the points to affinely span
/// the ambient space; n = 2 in general, n = 3 only for a simplex support.
pub fn regular_subdivision(points: &[Vec<i64>], heights: &[f64]) -> Result<RegularSubdivision> {
    if points.is_empty() || points.len() != heights.len() {
        return Err(Error::InvalidArgument(
            "points and heights must be nonempty and of equal length".into(),
        ));
    }
    let n = points[0].len();
    let (pts, hts) = dedupe_lifted(points, heights);
    let ambient = LatticePolytope::from_points(n, &pts)?;
    match n {
        2 => subdivision_2d(ambient, pts, hts),
        3 => {
            if pts.len() == 4 && ambient.vertices().len() == 4 && ambient.affine_dim() == 3 {
                // a lifted simplex has exactly one upper facet: itself
                let cell = Cell::new(pts.clone())?;
                let used = pts.clone();
                Ok(RegularSubdivision {
                    ambient,
                    cells: vec![cell],
                    planes: vec![(vec![0.0; 3], 0.0)],
                    used,
                    points: pts,
                    heights: hts,
                })
            } else {
                Err(Error::UnsupportedDimension(3))
            }
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

fn subdivision_2d(
    ambient: LatticePolytope,
    pts: Vec<Vec<i64>>,
    hts: Vec<f64>,
) -> Result<RegularSubdivision> {
    if ambient.affine_dim() != 2 {
        return Err(Error::DegenerateSpan);
    }
    let m = pts.len();
    let mut cells: Vec<Cell> = Vec::new();
    let mut planes: Vec<(Vec<f64>, f64)> = Vec::new();
    let mut seen: Vec<Vec<Vec<i64>>> = Vec::new();

    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let det = crate::lattice::orient2(&pts[i], &pts[j], &pts[k]);
                if det == 0 {
                    continue;
                }
                // plane z = <c, p> + d through the three lifted points
                let (a, b, c3) = (&pts[i], &pts[j], &pts[k]);
                let (ha, hb, hc) = (hts[i], hts[j], hts[k]);
                let ux = (b[0] - a[0]) as f64;
                let uy = (b[1] - a[1]) as f64;
                let vx = (c3[0] - a[0]) as f64;
                let vy = (c3[1] - a[1]) as f64;
                let du = hb - ha;
                let dv = hc - ha;
                let detf = det as f64;
                let cx = (du * vy - dv * uy) / detf;
                let cy = (dv * ux - du * vx) / detf;
                let d = ha - cx * a[0] as f64 - cy * a[1] as f64;
                // upper facet: no lifted point strictly above the plane
                let mut upper = true;
                for t in 0..m {
                    let z = cx * pts[t][0] as f64 + cy * pts[t][1] as f64 + d;
                    if hts[t] > z + HEIGHT_TOL {
                        upper = false;
                        break;
                    }
                }
                if !upper {
                    continue;
                }
                let support: Vec<Vec<i64>> = (0..m)
                    .filter(|&t| {
                        let z = cx * pts[t][0] as f64 + cy * pts[t][1] as f64 + d;
                        (hts[t] - z).abs() <= HEIGHT_TOL
                    })
                    .map(|t| pts[t].clone())
                    .collect();
                let cell = Cell::new(support)?;
                if cell.affine_dim() != 2 {
                    continue;
                }
                if seen.iter().any(|s| *s == cell.vertices().to_vec()) {
                    continue;
                }
                seen.push(cell.vertices().to_vec());
                cells.push(cell);
                planes.push((vec![cx, cy], d));
            }
        }
    }

    // Near-coplanar height noise can admit both a merged facet and its
    // sub-triangles; drop any cell whose vertices all lie inside another.
    let mut keep = vec![true; cells.len()];
    for a in 0..cells.len() {
        for b in 0..cells.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cells[a].vertices().len() < cells[b].vertices().len()
                && cells[a]
                    .vertices()
                    .iter()
                    .all(|v| cells[b].contains_lattice_point(v))
            {
                keep[a] = false;
                break;
            }
        }
    }
    let mut kept: Vec<(Cell, (Vec<f64>, f64))> = cells
        .into_iter()
        .zip(planes)
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(cp, _)| cp)
        .collect();
    kept.sort_by(|a, b| a.0.vertices().cmp(&b.0.vertices().to_vec()));

    let mut used: Vec<Vec<i64>> = kept
        .iter()
        .flat_map(|(c, _)| c.vertices().iter().cloned())
        .collect();
    used.sort();
    used.dedup();

    let (cells, planes): (Vec<Cell>, Vec<(Vec<f64>, f64)>) = kept.into_iter().unzip();
    Ok(RegularSubdivision {
        ambient,
        cells,
        planes,
        used,
        points: pts,
        heights: hts,
    })
}

/// Concavity of α ↦ log|a_α| over the support: true iff every lifted support
/// point lies on the upper hull (within [`HEIGHT_TOL`]); otherwise returns a
/// violating exponent. Lattice points of the Newton polytope outside the
/// support are not constrained (sparse supports are flagged separately in
/// the hypothesis report).
pub fn is_concave_on_support(f: &LaurentPolynomial) -> (bool, Option<Vec<i64>>) {
    let pts = f.support_vec();
    let hts: Vec<f64> = pts
        .iter()
        .map(|p| f.coefficient(p).unwrap().norm().ln())
        .collect();
    if pts.len() <= 2 {
        return (true, None);
    }
    let rank = {
        let poly = LatticePolytope::from_points(f.dimension(), &pts);
        match poly {
            Ok(p) => p.affine_dim(),
            Err(_) => return (true, None),
        }
    };
    if rank < 2 {
        return concave_along_line(&pts, &hts);
    }
    if f.dimension() != 2 {
        // n = 3 support of a simplex is always concave; larger supports are
        // out of scope for the subdivision machinery
        return (true, None);
    }
    let sub = match regular_subdivision(&pts, &hts) {
        Ok(s) => s,
        Err(_) => return (true, None),
    };
    for (p, &h) in pts.iter().zip(hts.iter()) {
        if let Some(z) = sub.hull_height(p) {
            if h < z - HEIGHT_TOL {
                return (false, Some(p.clone()));
            }
        }
    }
    (true, None)
}

fn concave_along_line(pts: &[Vec<i64>], hts: &[f64]) -> (bool, Option<Vec<i64>>) {
    // parametrize by position along the primitive direction
    let base = &pts[0];
    let dir: Vec<i64> = pts
        .iter()
        .map(|p| {
            (
                p.iter().zip(base).map(|(a, b)| a - b).collect::<Vec<i64>>(),
                p,
            )
        })
        .filter(|(d, _)| d.iter().any(|&x| x != 0))
        .map(|(d, _)| d)
        .next()
        .unwrap_or_else(|| vec![0; base.len()]);
    if dir.iter().all(|&x| x == 0) {
        return (true, None);
    }
    let mut ts: Vec<(f64, f64, &Vec<i64>)> = pts
        .iter()
        .zip(hts.iter())
        .map(|(p, &h)| {
            let num: i64 = p.iter().zip(base).zip(&dir).map(|((a, b), d)| (a - b) * d).sum();
            let den: i64 = dir.iter().map(|d| d * d).sum();
            (num as f64 / den as f64, h, p)
        })
        .collect();
    ts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    for w in 1..ts.len().saturating_sub(1) {
        let (t0, h0, _) = ts[w - 1];
        let (t1, h1, p) = ts[w];
        let (t2, h2, _) = ts[w + 1];
        let chord = h0 + (h2 - h0) * (t1 - t0) / (t2 - t0);
        if h1 < chord - HEIGHT_TOL {
            return (false, Some(p.clone()));
        }
    }
    (true, None)
}

/// True iff |a_α| ≥ 1 for every vertex α of the Newton polytope.
pub fn vertex_coefficient_bound(f: &LaurentPolynomial) -> bool {
    let np = f.newton_polytope();
    np.vertices()
        .iter()
        .all(|v| f.coefficient(v).map(|c| c.norm() >= 1.0 - 1e-12).unwrap_or(false))
}
