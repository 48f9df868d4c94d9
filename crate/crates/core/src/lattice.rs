//! Exact integer geometry on lattice points: convex hulls, containment,
//! lattice-point enumeration, cells, and simplex edge midpoints.
//!
//! All orientation and containment predicates on lattice data use integer
//! arithmetic (i128 intermediates), so there is no tolerance anywhere in this
//! module; floating point appears only in measures returned to callers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) fn orient2(a: &[i64], b: &[i64], c: &[i64]) -> i128 {
    let abx = (b[0] - a[0]) as i128;
    let aby = (b[1] - a[1]) as i128;
    let acx = (c[0] - a[0]) as i128;
    let acy = (c[1] - a[1]) as i128;
    abx * acy - aby * acx
}

fn sub3(a: &[i64], b: &[i64]) -> [i128; 3] {
    [
        (a[0] - b[0]) as i128,
        (a[1] - b[1]) as i128,
        (a[2] - b[2]) as i128,
    ]
}

fn cross3(u: [i128; 3], v: [i128; 3]) -> [i128; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn dot3(u: [i128; 3], v: [i128; 3]) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Exact membership of an integer point in the convex hull of ≤ n+1 integer
/// points (a Carathéodory piece).
fn in_simplex_piece(piece: &[&Vec<i64>], p: &[i64], n: usize) -> bool {
    match piece.len() {
        1 => piece[0].as_slice() == p,
        2 => {
            let a = piece[0];
            let b = piece[1];
            match n {
                2 => {
                    if orient2(a, b, &p.to_vec()) != 0 {
                        return false;
                    }
                    let ab: Vec<i128> = (0..n).map(|i| (b[i] - a[i]) as i128).collect();
                    let ap: Vec<i128> = (0..n).map(|i| (p[i] - a[i]) as i128).collect();
                    let dot: i128 = ab.iter().zip(&ap).map(|(x, y)| x * y).sum();
                    let len2: i128 = ab.iter().map(|x| x * x).sum();
                    dot >= 0 && dot <= len2
                }
                3 => {
                    let ab = sub3(b, a);
                    let ap = sub3(&p.to_vec(), a);
                    if cross3(ab, ap) != [0, 0, 0] {
                        return false;
                    }
                    let dot = dot3(ab, ap);
                    dot >= 0 && dot <= dot3(ab, ab)
                }
                _ => unreachable!(),
            }
        }
        3 => {
            let (a, b, c) = (piece[0], piece[1], piece[2]);
            match n {
                2 => {
                    let d0 = orient2(a, b, &c.to_vec());
                    if d0 == 0 {
                        return false; // degenerate; covered by smaller pieces
                    }
                    let pv = p.to_vec();
                    let s1 = orient2(a, b, &pv) * d0.signum();
                    let s2 = orient2(b, c, &pv) * d0.signum();
                    let s3 = orient2(c, a, &pv) * d0.signum();
                    s1 >= 0 && s2 >= 0 && s3 >= 0
                }
                3 => {
                    let ab = sub3(b, a);
                    let ac = sub3(c, a);
                    let nrm = cross3(ab, ac);
                    if nrm == [0, 0, 0] {
                        return false;
                    }
                    let ap = sub3(&p.to_vec(), a);
                    if dot3(ap, nrm) != 0 {
                        return false;
                    }
                    let denom = dot3(nrm, nrm);
                    let s_num = dot3(cross3(ap, ac), nrm);
                    let t_num = dot3(cross3(ab, ap), nrm);
                    s_num >= 0 && t_num >= 0 && s_num + t_num <= denom
                }
                _ => unreachable!(),
            }
        }
        4 => {
            debug_assert_eq!(n, 3);
            let (a, b, c, d) = (piece[0], piece[1], piece[2], piece[3]);
            let det =
                |u: [i128; 3], v: [i128; 3], w: [i128; 3]| -> i128 { dot3(u, cross3(v, w)) };
            let d0 = det(sub3(b, a), sub3(c, a), sub3(d, a));
            if d0 == 0 {
                return false;
            }
            let pv = p.to_vec();
            let sgn = d0.signum();
            let l1 = det(sub3(&pv, a), sub3(c, a), sub3(d, a)) * sgn;
            let l2 = det(sub3(b, a), sub3(&pv, a), sub3(d, a)) * sgn;
            let l3 = det(sub3(b, a), sub3(c, a), sub3(&pv, a)) * sgn;
            l1 >= 0 && l2 >= 0 && l3 >= 0 && l1 + l2 + l3 <= d0 * sgn
        }
        _ => false,
    }
}

/// Exact test: does the convex hull of `points` contain `p`? Supports n ≤ 3
/// by Carathéodory (subsets of size ≤ n+1).
pub(crate) fn hull_contains_lattice(n: usize, points: &[Vec<i64>], p: &[i64]) -> bool {
    match n {
        1 => {
            let lo = points.iter().map(|q| q[0]).min().unwrap();
            let hi = points.iter().map(|q| q[0]).max().unwrap();
            lo <= p[0] && p[0] <= hi
        }
        2 | 3 => {
            let m = points.len();
            let idx: Vec<&Vec<i64>> = points.iter().collect();
            for i in 0..m {
                if in_simplex_piece(&[idx[i]], p, n) {
                    return true;
                }
                for j in (i + 1)..m {
                    if in_simplex_piece(&[idx[i], idx[j]], p, n) {
                        return true;
                    }
                    for k in (j + 1)..m {
                        if in_simplex_piece(&[idx[i], idx[j], idx[k]], p, n) {
                            return true;
                        }
                        if n == 3 {
                            for l in (k + 1)..m {
                                if in_simplex_piece(&[idx[i], idx[j], idx[k], idx[l]], p, n) {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
            false
        }
        _ => false,
    }
}

fn affine_rank(points: &[Vec<i64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let n = points[0].len();
    let base = &points[0];
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| (0..n).map(|i| (p[i] - base[i]) as i128).collect())
        .collect();
    // Gaussian elimination over the rationals (fraction-free is unnecessary
    // at these sizes, but we stay in integers by cross-multiplying).
    let mut rows = diffs;
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col];
        for r in (rank + 1)..rows.len() {
            if rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..n {
                    rows[r][c] = rows[r][c] * lead - rows[rank][c] * f;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Counterclockwise convex hull of 2D lattice points (monotone chain).
/// Collinear inputs yield the two extreme endpoints; a single point yields
/// itself. The ring starts at the lexicographically smallest vertex.
pub fn convex_hull_2d(points: &[Vec<i64>]) -> Result<LatticePolytope> {
    for p in points {
        if p.len() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: p.len(),
            });
        }
    }
    LatticePolytope::from_points(2, points)
}

fn hull_ring_2d(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient2(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient2(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 2 {
        // all input points collinear
        let mut seg = vec![pts[0].clone(), pts[pts.len() - 1].clone()];
        seg.dedup();
        return seg;
    }
    lower
}

/// A lattice polytope given by its vertex set and the generating points.
/// For n = 2 the vertices form a counterclockwise ring; otherwise they are
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePolytope {
    n: usize,
    vertices: Vec<Vec<i64>>,
    generators: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn from_points(n: usize, points: &[Vec<i64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        if n == 0 || n > 3 {
            return Err(Error::UnsupportedDimension(n));
        }
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.len(),
                });
            }
        }
        let mut generators: Vec<Vec<i64>> = points.to_vec();
        generators.sort();
        generators.dedup();
        let vertices = match n {
            1 => {
                let lo = generators.first().unwrap().clone();
                let hi = generators.last().unwrap().clone();
                let mut v = vec![lo, hi];
                v.dedup();
                v
            }
            2 => hull_ring_2d(&generators),
            3 => {
                let mut extreme: Vec<Vec<i64>> = Vec::new();
                for (i, p) in generators.iter().enumerate() {
                    let others: Vec<Vec<i64>> = generators
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, q)| q.clone())
                        .collect();
                    if others.is_empty() || !hull_contains_lattice(3, &others, p) {
                        extreme.push(p.clone());
                    }
                }
                extreme
            }
            _ => unreachable!(),
        };
        Ok(Self {
            n,
            vertices,
            generators,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Affine dimension of the polytope (0 for a point, 1 for a segment, ...).
    pub fn affine_dim(&self) -> usize {
        affine_rank(&self.vertices)
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn contains_lattice_point(&self, p: &[i64]) -> bool {
        p.len() == self.n && hull_contains_lattice(self.n, &self.vertices, p)
    }

    /// All integer points of the polytope (boundary included), sorted
    /// lexicographically. Supported for n ≤ 3.
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        let (lo, hi) = self.bbox();
        let mut out = Vec::new();
        match self.n {
            1 => {
                for x in lo[0]..=hi[0] {
                    if self.contains_lattice_point(&[x]) {
                        out.push(vec![x]);
                    }
                }
            }
            2 => {
                for x in lo[0]..=hi[0] {
                    for y in lo[1]..=hi[1] {
                        if self.contains_lattice_point(&[x, y]) {
                            out.push(vec![x, y]);
                        }
                    }
                }
            }
            3 => {
                for x in lo[0]..=hi[0] {
                    for y in lo[1]..=hi[1] {
                        for z in lo[2]..=hi[2] {
                            if self.contains_lattice_point(&[x, y, z]) {
                                out.push(vec![x, y, z]);
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }

    pub fn bbox(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices {
            for i in 0..self.n {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        (lo, hi)
    }

    /// Doubled area of a 2D polytope (shoelace; exact integer).
    pub fn area2(&self) -> i128 {
        if self.n != 2 || self.vertices.len() < 3 {
            return 0;
        }
        let v = &self.vertices;
        let mut acc: i128 = 0;
        for i in 0..v.len() {
            let a = &v[i];
            let b = &v[(i + 1) % v.len()];
            acc += a[0] as i128 * b[1] as i128 - b[0] as i128 * a[1] as i128;
        }
        acc.abs()
    }

    /// Number of lattice points on the boundary (2D).
    pub fn boundary_lattice_count(&self) -> i64 {
        if self.n != 2 {
            return 0;
        }
        match self.vertices.len() {
            1 => 1,
            2 => {
                let a = &self.vertices[0];
                let b = &self.vertices[1];
                gcd64((b[0] - a[0]).abs(), (b[1] - a[1]).abs()) + 1
            }
            _ => {
                let v = &self.vertices;
                (0..v.len())
                    .map(|i| {
                        let a = &v[i];
                        let b = &v[(i + 1) % v.len()];
                        gcd64((b[0] - a[0]).abs(), (b[1] - a[1]).abs())
                    })
                    .sum()
            }
        }
    }

    /// Maximum pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                let d2: f64 = a
                    .iter()
                    .zip(b.iter())
                    .map(|(x, y)| ((x - y) as f64).powi(2))
                    .sum();
                best = best.max(d2.sqrt());
            }
        }
        best
    }

    /// Approximate containment of a real point with a tolerance measured as
    /// Euclidean distance to the polytope (2D only; degenerate polytopes are
    /// handled as segments or points).
    pub fn contains_point(&self, p: &[f64], tol: f64) -> bool {
        assert_eq!(self.n, 2, "contains_point is 2D only");
        match self.vertices.len() {
            1 => {
                let v = &self.vertices[0];
                let dx = p[0] - v[0] as f64;
                let dy = p[1] - v[1] as f64;
                (dx * dx + dy * dy).sqrt() <= tol
            }
            2 => segment_distance(&self.vertices[0], &self.vertices[1], p) <= tol,
            _ => {
                let v = &self.vertices;
                for i in 0..v.len() {
                    let a = &v[i];
                    let b = &v[(i + 1) % v.len()];
                    let ex = (b[0] - a[0]) as f64;
                    let ey = (b[1] - a[1]) as f64;
                    let px = p[0] - a[0] as f64;
                    let py = p[1] - a[1] as f64;
                    let cross = ex * py - ey * px;
                    let len = (ex * ex + ey * ey).sqrt();
                    if cross / len < -tol {
                        return false;
                    }
                }
                true
            }
        }
    }
}

fn segment_distance(a: &[i64], b: &[i64], p: &[f64]) -> f64 {
    let ax = a[0] as f64;
    let ay = a[1] as f64;
    let ex = (b[0] - a[0]) as f64;
    let ey = (b[1] - a[1]) as f64;
    let len2 = ex * ex + ey * ey;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p[0] - ax) * ex + (p[1] - ay) * ey) / len2).clamp(0.0, 1.0)
    };
    let qx = ax + t * ex;
    let qy = ay + t * ey;
    ((p[0] - qx).powi(2) + (p[1] - qy).powi(2)).sqrt()
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

/// A cell of a subdivision: the convex hull of a set of lattice points,
/// stored by its extreme points (counterclockwise ring in 2D).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    vertices: Vec<Vec<i64>>,
    dim: usize,
}

impl Cell {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        let n = points[0].len();
        let poly = LatticePolytope::from_points(n, &points)?;
        let dim = poly.affine_dim();
        Ok(Self {
            vertices: poly.vertices().to_vec(),
            dim,
        })
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn affine_dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// A cell is a simplex when its vertices are affinely independent.
    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn contains_lattice_point(&self, p: &[i64]) -> bool {
        p.len() == self.ambient_dim()
            && hull_contains_lattice(self.ambient_dim(), &self.vertices, p)
    }

    /// Doubled area for 2D cells.
    pub fn area2(&self) -> i128 {
        if self.ambient_dim() != 2 || self.vertices.len() < 3 {
            return 0;
        }
        let v = &self.vertices;
        let mut acc: i128 = 0;
        for i in 0..v.len() {
            let a = &v[i];
            let b = &v[(i + 1) % v.len()];
            acc += a[0] as i128 * b[1] as i128 - b[0] as i128 * a[1] as i128;
        }
        acc.abs()
    }

    /// Midpoints (vᵢ+vⱼ)/2 of all 1-dimensional faces of a full-dimensional
    /// simplex; there are C(n+1, 2) of them. Errors on non-simplex input.
    pub fn edge_midpoints(&self) -> Result<Vec<Vec<f64>>> {
        let n = self.ambient_dim();
        if !self.is_simplex() || self.dim != n {
            return Err(Error::NotASimplex);
        }
        let mut sorted = self.vertices.clone();
        sorted.sort();
        let mut out = Vec::new();
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                out.push(
                    sorted[i]
                        .iter()
                        .zip(sorted[j].iter())
                        .map(|(a, b)| (a + b) as f64 / 2.0)
                        .collect(),
                );
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[[i64; 2]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    /// Independent extreme-point oracle: p is a hull vertex iff some integer
    /// direction strictly separates it from every other point.
    fn extreme_by_halfplane(points: &[Vec<i64>], p: &[i64]) -> bool {
        let r = 12i64;
        for cx in -r..=r {
            for cy in -r..=r {
                if cx == 0 && cy == 0 {
                    continue;
                }
                let vp = cx * p[0] + cy * p[1];
                if points
                    .iter()
                    .filter(|q| q.as_slice() != p)
                    .all(|q| cx * q[0] + cy * q[1] < vp)
                {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn hull_basic_and_interior_point() {
        let p = pts(&[[0, 0], [2, 0], [0, 2], [1, 1]]);
        let hull = convex_hull_2d(&p).unwrap();
        assert_eq!(hull.vertices(), pts(&[[0, 0], [2, 0], [0, 2]]).as_slice());
        for q in &p {
            assert_eq!(
                extreme_by_halfplane(&p, q),
                hull.vertices().contains(q),
                "oracle disagrees at {:?}",
                q
            );
        }
    }

    #[test]
    fn hull_of_example_support() {
        // support of x + 30xy + 20x^2y + x^3y + y^2
        let p = pts(&[[1, 0], [1, 1], [2, 1], [3, 1], [0, 2]]);
        let hull = convex_hull_2d(&p).unwrap();
        let mut vs = hull.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, pts(&[[0, 2], [1, 0], [3, 1]]));
        for q in &p {
            assert_eq!(extreme_by_halfplane(&p, q), hull.vertices().contains(q));
        }
    }

    #[test]
    fn hull_centroid_never_a_vertex() {
        let p = pts(&[[1, 0], [0, 1], [2, 2], [1, 1]]);
        let hull = convex_hull_2d(&p).unwrap();
        assert!(!hull.vertices().contains(&vec![1, 1]));
        assert_eq!(hull.vertices().len(), 3);
    }

    #[test]
    fn hull_collinear_and_singleton() {
        let p = pts(&[[0, 0], [1, 1], [2, 2]]);
        let hull = convex_hull_2d(&p).unwrap();
        assert_eq!(hull.vertices(), pts(&[[0, 0], [2, 2]]).as_slice());
        assert_eq!(hull.affine_dim(), 1);

        let single = convex_hull_2d(&pts(&[[3, 4]])).unwrap();
        assert_eq!(single.vertices().len(), 1);
        assert_eq!(single.affine_dim(), 0);
    }

    #[test]
    fn hull_ring_is_counterclockwise() {
        let p = pts(&[[0, 0], [3, 0], [3, 3], [0, 3], [1, 1], [2, 2]]);
        let hull = convex_hull_2d(&p).unwrap();
        let v = hull.vertices();
        assert_eq!(v.len(), 4);
        for i in 0..v.len() {
            let o = orient2(&v[i], &v[(i + 1) % v.len()], &v[(i + 2) % v.len()]);
            assert!(o > 0, "ring not strictly counterclockwise");
        }
    }

    #[test]
    fn lattice_points_triangle() {
        let t = convex_hull_2d(&pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        assert_eq!(t.lattice_points().len(), 3);

        let t2 = convex_hull_2d(&pts(&[[1, 0], [3, 1], [0, 2]])).unwrap();
        let lp = t2.lattice_points();
        assert_eq!(
            lp,
            pts(&[[0, 2], [1, 0], [1, 1], [2, 1], [3, 1]]),
            "five lattice points, sorted lexicographically"
        );
        // Pick cross-check: Area = I + B/2 - 1
        let area2 = t2.area2();
        let b = t2.boundary_lattice_count();
        let i = lp.len() as i64 - b;
        assert_eq!(area2, (2 * i + b - 2) as i128);
        assert_eq!(area2, 5);
    }

    #[test]
    fn unit_3_simplex() {
        let pts3: Vec<Vec<i64>> = vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ];
        let s = LatticePolytope::from_points(3, &pts3).unwrap();
        assert_eq!(s.vertices().len(), 4);
        assert_eq!(s.lattice_points().len(), 4);
        assert!(s.contains_lattice_point(&[0, 0, 0]));
        assert!(!s.contains_lattice_point(&[1, 1, 0]));
    }

    #[test]
    fn extreme_points_3d_drop_inner_points() {
        let mut pts3: Vec<Vec<i64>> = vec![
            vec![0, 0, 0],
            vec![2, 0, 0],
            vec![0, 2, 0],
            vec![0, 0, 2],
        ];
        pts3.push(vec![1, 0, 0]); // on an edge
        let s = LatticePolytope::from_points(3, &pts3).unwrap();
        assert_eq!(s.vertices().len(), 4);
        assert!(!s.vertices().contains(&vec![1, 0, 0]));
    }

    #[test]
    fn edge_midpoints_of_simplices() {
        let tri = Cell::new(pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        let mids = tri.edge_midpoints().unwrap();
        assert_eq!(mids.len(), 3);
        assert!(mids.contains(&vec![0.5, 0.0]));
        assert!(mids.contains(&vec![0.0, 0.5]));
        assert!(mids.contains(&vec![0.5, 0.5]));

        let tri2 = Cell::new(pts(&[[1, 0], [0, 1], [2, 2]])).unwrap();
        let mids2 = tri2.edge_midpoints().unwrap();
        assert!(mids2.contains(&vec![0.5, 0.5]));
        assert!(mids2.contains(&vec![1.5, 1.0]));
        assert!(mids2.contains(&vec![1.0, 1.5]));

        let simplex3 = Cell::new(vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ])
        .unwrap();
        assert_eq!(simplex3.edge_midpoints().unwrap().len(), 6);

        let quad = Cell::new(pts(&[[0, 0], [1, 0], [1, 1], [0, 1]])).unwrap();
        assert!(matches!(quad.edge_midpoints(), Err(Error::NotASimplex)));
        // a segment in the plane is a simplex of the wrong dimension
        let seg = Cell::new(pts(&[[0, 0], [1, 0]])).unwrap();
        assert!(matches!(seg.edge_midpoints(), Err(Error::NotASimplex)));
    }

    #[test]
    fn polytope_contains_point_with_tolerance() {
        let t = convex_hull_2d(&pts(&[[0, 0], [2, 0], [0, 2]])).unwrap();
        assert!(t.contains_point(&[0.5, 0.5], 1e-9));
        assert!(t.contains_point(&[0.0, 0.0], 1e-9));
        assert!(!t.contains_point(&[1.2, 1.2], 1e-9));
        assert!(t.contains_point(&[1.0 + 5e-10, 1.0 + 5e-10], 1e-8));
    }
}
