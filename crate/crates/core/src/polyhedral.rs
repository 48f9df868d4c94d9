//! The amoeba-shaped polyhedral complex: hypothesis checks, the direct
//! medial-simplex constructor (one cell per triangle of the dual
//! triangulation, spanned by its edge midpoints), the Hadamard-limit
//! estimator, and complement/π₀ analysis inside the Newton polytope.

use serde::Serialize;

use crate::amoeba::{labeled_components_pub as labeled_components, ClassifyOptions};
use crate::error::{Error, Result};
use crate::exec;
use crate::moment::{wca, PointCloud, SampleOptions};
use crate::numerics::{hausdorff_distance, PointGrid};
use crate::poly::LaurentPolynomial;
use crate::raster::{components, Raster, Window};
use crate::subdivision::{
    is_concave_on_support, regular_subdivision, vertex_coefficient_bound, RegularSubdivision,
};

/// The three hypotheses of the limit theorem, checked separately, plus a
/// sparseness flag: concavity is only testable on the support, so a support
/// smaller than N ∩ ℤⁿ is surfaced rather than silently accepted.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub vertex_bound: bool,
    pub concave: bool,
    pub concavity_witness: Option<Vec<i64>>,
    pub triangulation: bool,
    pub eligible: bool,
    pub sparse_support: bool,
}

fn support_subdivision(f: &LaurentPolynomial) -> Result<RegularSubdivision> {
    let pts = f.support_vec();
    let hts: Vec<f64> = pts
        .iter()
        .map(|p| f.coefficient(p).unwrap().norm().ln())
        .collect();
    regular_subdivision(&pts, &hts)
}

pub fn check_hypotheses(f: &LaurentPolynomial) -> HypothesisReport {
    let vertex_bound = vertex_coefficient_bound(f);
    let (concave, concavity_witness) = is_concave_on_support(f);
    let triangulation = support_subdivision(f)
        .map(|s| s.is_triangulation())
        .unwrap_or(false);
    let sparse_support = {
        let np = f.newton_polytope();
        np.lattice_points().len() > f.num_terms()
    };
    HypothesisReport {
        vertex_bound,
        concave,
        concavity_witness,
        triangulation,
        eligible: vertex_bound && concave && triangulation,
        sparse_support,
    }
}

/// One maximal cell of the complex: convex hull of the edge midpoints of its
/// dual simplex. Vertices are half-integers (counterclockwise ring in 2D).
#[derive(Clone, Debug, Serialize)]
pub struct ComplexCell {
    pub vertices: Vec<Vec<f64>>,
    pub dual_simplex: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyhedralComplex {
    pub n: usize,
    pub cells: Vec<ComplexCell>,
}

fn polygon_contains(ring: &[[f64; 2]], p: [f64; 2], tol: f64) -> bool {
    if ring.len() < 3 {
        return false;
    }
    for i in 0..ring.len() {
        let a = ring[i];
        let b = ring[(i + 1) % ring.len()];
        let ex = b[0] - a[0];
        let ey = b[1] - a[1];
        let cross = ex * (p[1] - a[1]) - ey * (p[0] - a[0]);
        let len = (ex * ex + ey * ey).sqrt();
        if cross / len < -tol {
            return false;
        }
    }
    true
}

impl PolyhedralComplex {
    fn ring_2d(cell: &ComplexCell) -> Vec<[f64; 2]> {
        cell.vertices.iter().map(|v| [v[0], v[1]]).collect()
    }

    /// Doubled-coordinate rings are integral, so 2D containment of lattice
    /// points is exact.
    fn doubled_ring(cell: &ComplexCell) -> Vec<Vec<i64>> {
        cell.vertices
            .iter()
            .map(|v| v.iter().map(|&x| (2.0 * x).round() as i64).collect())
            .collect()
    }

    /// Exact: does any cell contain the lattice point (2D)?
    pub fn contains_lattice_point(&self, p: &[i64]) -> bool {
        let doubled: Vec<i64> = p.iter().map(|&x| 2 * x).collect();
        self.cells.iter().any(|cell| {
            let ring = Self::doubled_ring(cell);
            crate::lattice::hull_contains_lattice(2, &ring, &doubled)
        })
    }

    /// Tolerant containment of a real point in any cell (2D).
    pub fn contains_point(&self, p: [f64; 2], tol: f64) -> bool {
        self.cells
            .iter()
            .any(|cell| polygon_contains(&Self::ring_2d(cell), p, tol))
    }

    /// Dense sample of the union of cells (2D): barycentric grids over each
    /// triangle at roughly the requested spacing.
    pub fn sample_dense(&self, spacing: f64) -> Vec<[f64; 2]> {
        let mut out = Vec::new();
        for cell in &self.cells {
            let ring = Self::ring_2d(cell);
            if ring.len() != 3 {
                continue;
            }
            let edge = |a: [f64; 2], b: [f64; 2]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
            let longest = edge(ring[0], ring[1])
                .max(edge(ring[1], ring[2]))
                .max(edge(ring[2], ring[0]));
            let k = ((longest / spacing).ceil() as usize).max(1);
            for i in 0..=k {
                for j in 0..=(k - i) {
                    let a = i as f64 / k as f64;
                    let b = j as f64 / k as f64;
                    let c = 1.0 - a - b;
                    out.push([
                        a * ring[0][0] + b * ring[1][0] + c * ring[2][0],
                        a * ring[0][1] + b * ring[1][1] + c * ring[2][1],
                    ]);
                }
            }
        }
        out
    }
}

/// Direct constructor: requires the subdivision dual to the tropical curve
/// to be a triangulation; each maximal simplex contributes the convex hull
/// of its edge midpoints, glued along shared-face midpoints.
pub fn direct_complex(f: &LaurentPolynomial) -> Result<PolyhedralComplex> {
    let n = f.dimension();
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    let sub = support_subdivision(f)?;
    if !sub.is_triangulation() {
        return Err(Error::NotATriangulation);
    }
    let mut cells = Vec::new();
    for cell in sub.cells() {
        let vertices: Vec<Vec<f64>> = if n == 2 {
            // midpoints in ring order keep the medial triangle counterclockwise
            let ring = cell.vertices();
            (0..ring.len())
                .map(|i| {
                    let a = &ring[i];
                    let b = &ring[(i + 1) % ring.len()];
                    a.iter()
                        .zip(b.iter())
                        .map(|(x, y)| (x + y) as f64 / 2.0)
                        .collect()
                })
                .collect()
        } else {
            cell.edge_midpoints()?
        };
        cells.push(ComplexCell {
            vertices,
            dual_simplex: cell.vertices().to_vec(),
        });
    }
    Ok(PolyhedralComplex { n, cells })
}

pub fn default_schedule() -> Vec<f64> {
    vec![1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0]
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub r_values: Vec<f64>,
    pub distances: Vec<f64>,
    pub eps: f64,
    pub converged: bool,
    pub converged_at: Option<usize>,
    /// False marks the experimental regime: the limit is still computed but
    /// the theorem's hypotheses do not all hold.
    pub hypotheses_hold: bool,
}

/// Estimates P_f^∞ as the Hausdorff limit of WCA(f^[r]) along the schedule.
/// Convergence is declared at the first consecutive pair closer than eps
/// (default 0.02 × diam N); the full distance sequence is always returned
/// together with the final cloud.
pub fn limit_complex_estimate(
    f: &LaurentPolynomial,
    schedule: &[f64],
    eps: Option<f64>,
    sampling: &SampleOptions,
) -> Result<(PointCloud, ConvergenceReport)> {
    if f.dimension() != 2 {
        return Err(Error::UnsupportedDimension(f.dimension()));
    }
    if schedule.is_empty() {
        return Err(Error::InvalidArgument("empty r schedule".into()));
    }
    let eps = eps.unwrap_or_else(|| 0.02 * f.newton_polytope().diameter());
    let clouds: Vec<Result<PointCloud>> =
        exec::map_slice(schedule, |&r| wca(f, r, sampling));
    let mut resolved = Vec::with_capacity(clouds.len());
    for c in clouds {
        resolved.push(c?);
    }
    let mut distances = Vec::new();
    for pair in resolved.windows(2) {
        distances.push(hausdorff_distance(&pair[0].points, &pair[1].points)?);
    }
    let converged_at = distances.iter().position(|&d| d < eps);
    let report = ConvergenceReport {
        r_values: schedule.to_vec(),
        distances,
        eps,
        converged: converged_at.is_some(),
        converged_at,
        hypotheses_hold: check_hypotheses(f).eligible,
    };
    let last = resolved.pop().expect("nonempty schedule");
    Ok((last, report))
}

/// The complex against which a complement is analyzed: either exact cells or
/// a sampled cloud from the limit estimator.
pub enum ComplexSet<'a> {
    Cells(&'a PolyhedralComplex),
    Cloud(&'a PointCloud),
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplementRegion {
    pub cell_count: usize,
    pub representative: [f64; 2],
    pub lattice_points: Vec<Vec<i64>>,
    /// The region's order when it contains exactly one lattice point.
    pub order: Option<Vec<i64>>,
    /// Set when the region has zero or several lattice points
    /// (a conjecture violation, reported rather than suppressed).
    pub flagged: bool,
}

/// Default resolution of the complement raster over the Newton polytope.
pub const COMPLEMENT_RESOLUTION: usize = 600;

/// Rasterizes N ∖ P and flood-fills the complement components, listing the
/// lattice points contained in each. Lattice points lying on the complex are
/// tested exactly for cell input and by cloud distance for sampled input.
pub fn complement_analysis(
    set: ComplexSet<'_>,
    f: &LaurentPolynomial,
    resolution: usize,
    thicken: Option<f64>,
) -> Result<Vec<ComplementRegion>> {
    if f.dimension() != 2 {
        return Err(Error::UnsupportedDimension(f.dimension()));
    }
    let np = f.newton_polytope();
    if np.affine_dim() != 2 {
        return Err(Error::DegenerateSpan);
    }
    let (lo, hi) = np.bbox();
    let window = Window::new(lo[0] as f64, hi[0] as f64, lo[1] as f64, hi[1] as f64)?;
    let raster = Raster::new(window, resolution, resolution);
    let cell_diag = raster.cell_diagonal();

    let grid = match &set {
        ComplexSet::Cells(_) => None,
        ComplexSet::Cloud(cloud) => {
            if cloud.is_empty() {
                return Err(Error::EmptyCloud);
            }
            Some(PointGrid::build(&cloud.points))
        }
    };
    let delta = thicken.unwrap_or_else(|| match &set {
        ComplexSet::Cells(_) => 0.0,
        ComplexSet::Cloud(_) => (2.5 * cell_diag).max(0.07),
    });

    let on_complex = |p: [f64; 2]| -> bool {
        match (&set, &grid) {
            (ComplexSet::Cells(c), _) => c.contains_point(p, delta.max(1e-12)),
            (ComplexSet::Cloud(_), Some(g)) => g.nearest_distance(p) <= delta,
            _ => unreachable!(),
        }
    };

    // free = inside N and off the complex; row-parallel occupancy
    let rows: Vec<Vec<bool>> = exec::map_indices(resolution, |iy| {
        (0..resolution)
            .map(|ix| {
                let c = raster.center(ix, iy);
                np.contains_point(&[c[0], c[1]], 0.0) && !on_complex(c)
            })
            .collect()
    });
    let free = |ix: usize, iy: usize| rows[iy][ix];
    let all_comps = components(resolution, resolution, &free);

    // The corner wedges of N taper below cell width and pixelate into
    // detached fragments; fragments smaller than this are sub-resolution
    // residue, not regions.
    let min_cells = 4usize;
    let comps: Vec<_> = all_comps
        .into_iter()
        .filter(|c| c.cells.len() >= min_cells)
        .collect();

    // label lookup over the kept regions only
    let mut label = vec![usize::MAX; resolution * resolution];
    for (li, comp) in comps.iter().enumerate() {
        for &(ix, iy) in &comp.cells {
            label[iy * resolution + ix] = li;
        }
    }

    let mut regions: Vec<ComplementRegion> = comps
        .iter()
        .map(|comp| {
            let rep = comp.cells[comp.cells.len() / 2];
            ComplementRegion {
                cell_count: comp.cells.len(),
                representative: raster.center(rep.0, rep.1),
                lattice_points: Vec::new(),
                order: None,
                flagged: false,
            }
        })
        .collect();

    for p in np.lattice_points() {
        let on = match (&set, &grid) {
            (ComplexSet::Cells(c), _) => c.contains_lattice_point(&p),
            (ComplexSet::Cloud(_), Some(g)) => {
                g.nearest_distance([p[0] as f64, p[1] as f64]) <= delta
            }
            _ => unreachable!(),
        };
        if on {
            continue;
        }
        let pf = [p[0] as f64, p[1] as f64];
        let s = raster.cell_size();
        let cx = (((pf[0] - window.x[0]) / s[0]) as i64).clamp(0, resolution as i64 - 1);
        let cy = (((pf[1] - window.y[0]) / s[1]) as i64).clamp(0, resolution as i64 - 1);
        // nearest kept free cell, searched on expanding rings; a lattice
        // point off the complex always has a region within a few cells of
        // the polytope corner it marks
        let mut assigned = None;
        'search: for ring in 0..(resolution as i64) {
            for iy in (cy - ring).max(0)..=(cy + ring).min(resolution as i64 - 1) {
                for ix in (cx - ring).max(0)..=(cx + ring).min(resolution as i64 - 1) {
                    let on_ring = iy == cy - ring
                        || iy == cy + ring
                        || ix == cx - ring
                        || ix == cx + ring;
                    if !on_ring {
                        continue;
                    }
                    let l = label[iy as usize * resolution + ix as usize];
                    if l != usize::MAX {
                        assigned = Some(l);
                        break 'search;
                    }
                }
            }
            if ring > resolution as i64 / 8 {
                break;
            }
        }
        if let Some(l) = assigned {
            regions[l].lattice_points.push(p);
        }
    }

    for r in &mut regions {
        r.lattice_points.sort();
        if r.lattice_points.len() == 1 {
            r.order = Some(r.lattice_points[0].clone());
        } else {
            r.flagged = true;
        }
    }
    Ok(regions)
}

#[derive(Clone, Debug)]
pub struct Pi0Options {
    pub window: Option<Window>,
    pub resolution: [usize; 2],
    pub thetas: usize,
    pub draws: usize,
    pub seed: u64,
    pub complement_resolution: usize,
    pub schedule: Vec<f64>,
    pub eps: Option<f64>,
    pub sampling: SampleOptions,
}

impl Default for Pi0Options {
    fn default() -> Self {
        Self {
            window: None,
            resolution: [400, 400],
            thetas: 256,
            draws: 8,
            seed: 0,
            complement_resolution: COMPLEMENT_RESOLUTION,
            schedule: default_schedule(),
            eps: None,
            sampling: SampleOptions::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Pi0Report {
    pub amoeba_components: usize,
    pub amoeba_orders: Vec<Vec<i64>>,
    pub amoeba_indeterminate: usize,
    pub complex_components: usize,
    pub complex_orders: Vec<Vec<i64>>,
    pub complex_flagged: usize,
    pub method: String,
    pub matched: bool,
}

/// Compares π₀ of the affine-amoeba complement (raster flood fill, orders by
/// root counting) against π₀ of N ∖ P (complement analysis, orders by
/// contained lattice point). `matched` requires equal counts and equal order
/// multisets with no indeterminate evidence on either side.
pub fn pi0_compare(f: &LaurentPolynomial, opts: &Pi0Options) -> Result<Pi0Report> {
    if f.dimension() != 2 {
        return Err(Error::UnsupportedDimension(f.dimension()));
    }
    let window = match opts.window {
        Some(w) => w,
        None => crate::amoeba::auto_window(f)?,
    };
    let copts = ClassifyOptions {
        window: Some(window),
        resolution: opts.resolution,
        thetas: opts.thetas,
        draws: opts.draws,
        seed: opts.seed,
    };
    let labeled = labeled_components(f, &window, &copts)?;
    let mut amoeba_orders: Vec<Vec<i64>> = labeled
        .summaries
        .iter()
        .filter_map(|c| c.order.clone())
        .collect();
    amoeba_orders.sort();

    // complement side: exact cells when the dual subdivision triangulates,
    // the sampled Hadamard limit otherwise
    let (regions, method) = match direct_complex(f) {
        Ok(complex) => (
            complement_analysis(
                ComplexSet::Cells(&complex),
                f,
                opts.complement_resolution,
                None,
            )?,
            "direct",
        ),
        Err(Error::NotATriangulation) => {
            let (cloud, _) =
                limit_complex_estimate(f, &opts.schedule, opts.eps, &opts.sampling)?;
            (
                complement_analysis(
                    ComplexSet::Cloud(&cloud),
                    f,
                    opts.complement_resolution,
                    None,
                )?,
                "limit",
            )
        }
        Err(e) => return Err(e),
    };
    let mut complex_orders: Vec<Vec<i64>> = regions
        .iter()
        .filter_map(|r| r.order.clone())
        .collect();
    complex_orders.sort();
    let complex_flagged = regions.iter().filter(|r| r.flagged).count();

    let matched = labeled.failures == 0
        && complex_flagged == 0
        && labeled.summaries.len() == regions.len()
        && amoeba_orders == complex_orders;
    Ok(Pi0Report {
        amoeba_components: labeled.summaries.len(),
        amoeba_orders,
        amoeba_indeterminate: labeled.failures,
        complex_components: regions.len(),
        complex_orders,
        complex_flagged,
        method: method.to_string(),
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn hypotheses_on_fixture_family() {
        let good = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let rep = check_hypotheses(&good);
        assert!(rep.vertex_bound && rep.concave && rep.triangulation && rep.eligible);
        assert!(!rep.sparse_support);

        let bad_concave = parse_polynomial("x + y + x^2*y^2 + 0.5*x*y").unwrap();
        let rep = check_hypotheses(&bad_concave);
        assert!(!rep.concave);
        assert_eq!(rep.concavity_witness, Some(vec![1, 1]));
        assert!(!rep.eligible);

        let bad_vertex = parse_polynomial("0.5 + x + y").unwrap();
        let rep = check_hypotheses(&bad_vertex);
        assert!(!rep.vertex_bound);

        let quad = parse_polynomial("1 + x + y + x*y").unwrap();
        let rep = check_hypotheses(&quad);
        assert!(!rep.triangulation, "flat square is one quad cell");
    }

    #[test]
    fn medial_triangle_of_the_line() {
        let f = parse_polynomial("1 + x + y").unwrap();
        let complex = direct_complex(&f).unwrap();
        assert_eq!(complex.cells.len(), 1);
        let mut vs = complex.cells[0].vertices.clone();
        vs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(vs, vec![vec![0.0, 0.5], vec![0.5, 0.0], vec![0.5, 0.5]]);
    }

    #[test]
    fn octahedron_from_the_space_hyperplane() {
        let f = parse_polynomial("1 + x + y + z").unwrap();
        let complex = direct_complex(&f).unwrap();
        assert_eq!(complex.cells.len(), 1);
        let cell = &complex.cells[0];
        assert_eq!(cell.vertices.len(), 6);
        // exactly the edge midpoints of the unit 3-simplex
        let mut got = cell.vertices.clone();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expect = vec![
            vec![0.0, 0.0, 0.5],
            vec![0.0, 0.5, 0.0],
            vec![0.5, 0.0, 0.0],
            vec![0.0, 0.5, 0.5],
            vec![0.5, 0.0, 0.5],
            vec![0.5, 0.5, 0.0],
        ];
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn three_medial_triangles_touch_at_shared_midpoints() {
        let f = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let complex = direct_complex(&f).unwrap();
        assert_eq!(complex.cells.len(), 3);
        // each pair of adjacent cells shares exactly the midpoint of the
        // common dual edge
        for i in 0..3 {
            for j in (i + 1)..3 {
                let a = &complex.cells[i];
                let b = &complex.cells[j];
                let shared: Vec<&Vec<f64>> = a
                    .vertices
                    .iter()
                    .filter(|v| b.vertices.iter().any(|w| w == *v))
                    .collect();
                assert_eq!(shared.len(), 1, "cells {} and {} share one midpoint", i, j);
            }
        }
    }

    #[test]
    fn direct_refuses_non_triangulations() {
        let f = parse_polynomial("1 + x + y + x*y").unwrap();
        assert!(matches!(direct_complex(&f), Err(Error::NotATriangulation)));
    }

    #[test]
    fn direct_complex_invariant_under_hadamard_power() {
        let f = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let a = direct_complex(&f).unwrap();
        let b = direct_complex(&f.hadamard_power(3.0).unwrap()).unwrap();
        let ser_a = serde_json::to_string(&a).unwrap();
        let ser_b = serde_json::to_string(&b).unwrap();
        assert_eq!(ser_a, ser_b);
    }

    #[test]
    fn medial_complement_of_line_has_three_corner_regions() {
        let f = parse_polynomial("1 + x + y").unwrap();
        let complex = direct_complex(&f).unwrap();
        let regions = complement_analysis(ComplexSet::Cells(&complex), &f, 200, None).unwrap();
        assert_eq!(regions.len(), 3);
        let mut orders: Vec<Vec<i64>> = regions.iter().filter_map(|r| r.order.clone()).collect();
        orders.sort();
        assert_eq!(orders, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert!(regions.iter().all(|r| !r.flagged));
    }

    #[test]
    fn lattice_point_on_complex_is_detected_exactly() {
        // c = 1/2: the subdivision is the single big triangle, and (1,1) is
        // the centroid of its medial triangle, hence ON the complex
        let f = parse_polynomial("x + y + x^2*y^2 + 0.5*x*y").unwrap();
        let complex = direct_complex(&f).unwrap();
        assert!(complex.contains_lattice_point(&[1, 1]));
        let regions = complement_analysis(ComplexSet::Cells(&complex), &f, 200, None).unwrap();
        assert_eq!(regions.len(), 3);
        let mut orders: Vec<Vec<i64>> = regions.iter().filter_map(|r| r.order.clone()).collect();
        orders.sort();
        assert_eq!(orders, vec![vec![0, 1], vec![1, 0], vec![2, 2]]);
    }

    #[test]
    fn complement_of_c2_fixture_has_four_regions() {
        let f = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let complex = direct_complex(&f).unwrap();
        let regions = complement_analysis(ComplexSet::Cells(&complex), &f, 300, None).unwrap();
        assert_eq!(regions.len(), 4);
        let mut orders: Vec<Vec<i64>> = regions.iter().filter_map(|r| r.order.clone()).collect();
        orders.sort();
        assert_eq!(
            orders,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 2]]
        );
    }
}
