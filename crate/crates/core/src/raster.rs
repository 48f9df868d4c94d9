//! Axis-aligned windows, boolean occupancy rasters, and flood-fill
//! component analysis shared by the amoeba and complement pipelines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An axis-aligned box, usually in log coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub x: [f64; 2],
    pub y: [f64; 2],
}

impl Window {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x0 < x1 && y0 < y1) || !(x0.is_finite() && x1.is_finite() && y0.is_finite() && y1.is_finite()) {
            return Err(Error::BadWindow);
        }
        Ok(Self {
            x: [x0, x1],
            y: [y0, y1],
        })
    }

    pub fn width(&self) -> f64 {
        self.x[1] - self.x[0]
    }

    pub fn height(&self) -> f64 {
        self.y[1] - self.y[0]
    }

    pub fn pad(&self, m: f64) -> Self {
        Self {
            x: [self.x[0] - m, self.x[1] + m],
            y: [self.y[0] - m, self.y[1] + m],
        }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        p[0] >= self.x[0] && p[0] <= self.x[1] && p[1] >= self.y[0] && p[1] <= self.y[1]
    }

    pub fn axis(&self, i: usize) -> [f64; 2] {
        if i == 0 {
            self.x
        } else {
            self.y
        }
    }
}

/// Boolean occupancy grid over a window; row-major with x fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct Raster {
    pub window: Window,
    pub nx: usize,
    pub ny: usize,
    cells: Vec<bool>,
}

impl Raster {
    pub fn new(window: Window, nx: usize, ny: usize) -> Self {
        Self {
            window,
            nx,
            ny,
            cells: vec![false; nx * ny],
        }
    }

    pub fn cell_size(&self) -> [f64; 2] {
        [
            self.window.width() / self.nx as f64,
            self.window.height() / self.ny as f64,
        ]
    }

    pub fn cell_diagonal(&self) -> f64 {
        let s = self.cell_size();
        (s[0] * s[0] + s[1] * s[1]).sqrt()
    }

    pub fn cell_of(&self, p: [f64; 2]) -> Option<(usize, usize)> {
        if !self.window.contains(p) {
            return None;
        }
        let s = self.cell_size();
        let ix = (((p[0] - self.window.x[0]) / s[0]) as usize).min(self.nx - 1);
        let iy = (((p[1] - self.window.y[0]) / s[1]) as usize).min(self.ny - 1);
        Some((ix, iy))
    }

    pub fn center(&self, ix: usize, iy: usize) -> [f64; 2] {
        let s = self.cell_size();
        [
            self.window.x[0] + (ix as f64 + 0.5) * s[0],
            self.window.y[0] + (iy as f64 + 0.5) * s[1],
        ]
    }

    pub fn mark(&mut self, p: [f64; 2]) -> bool {
        if let Some((ix, iy)) = self.cell_of(p) {
            self.cells[iy * self.nx + ix] = true;
            true
        } else {
            false
        }
    }

    pub fn set(&mut self, ix: usize, iy: usize, v: bool) {
        self.cells[iy * self.nx + ix] = v;
    }

    pub fn occupied(&self, ix: usize, iy: usize) -> bool {
        self.cells[iy * self.nx + ix]
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Run-length encoding of the occupancy, row-major, starting with the
    /// length of the initial unoccupied run.
    pub fn to_rle(&self) -> Vec<u32> {
        let mut runs = Vec::new();
        let mut current = false;
        let mut len = 0u32;
        for &c in &self.cells {
            if c == current {
                len += 1;
            } else {
                runs.push(len);
                current = c;
                len = 1;
            }
        }
        runs.push(len);
        runs
    }

    pub fn from_rle(window: Window, nx: usize, ny: usize, rle: &[u32]) -> Result<Self> {
        let mut cells = Vec::with_capacity(nx * ny);
        let mut value = false;
        for &run in rle {
            for _ in 0..run {
                cells.push(value);
            }
            value = !value;
        }
        if cells.len() != nx * ny {
            return Err(Error::InvalidArgument(
                "run-length data does not match resolution".into(),
            ));
        }
        Ok(Self {
            window,
            nx,
            ny,
            cells,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RasterJson {
    window: Window,
    resolution: [usize; 2],
    rle: Vec<u32>,
}

impl Serialize for Raster {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RasterJson {
            window: self.window,
            resolution: [self.nx, self.ny],
            rle: self.to_rle(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Raster {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RasterJson::deserialize(d)?;
        Raster::from_rle(raw.window, raw.resolution[0], raw.resolution[1], &raw.rle)
            .map_err(serde::de::Error::custom)
    }
}

/// A 4-connected component of free cells.
#[derive(Clone, Debug)]
pub struct GridComponent {
    pub cells: Vec<(usize, usize)>,
    pub touches_boundary: bool,
}

/// Flood fill over all cells where `free` holds, in deterministic scan
/// order (y outer, x inner).
pub fn components<F: Fn(usize, usize) -> bool>(nx: usize, ny: usize, free: F) -> Vec<GridComponent> {
    let mut seen = vec![false; nx * ny];
    let mut out = Vec::new();
    for iy in 0..ny {
        for ix in 0..nx {
            if seen[iy * nx + ix] || !free(ix, iy) {
                continue;
            }
            let mut cells = Vec::new();
            let mut touches = false;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back((ix, iy));
            seen[iy * nx + ix] = true;
            while let Some((cx, cy)) = queue.pop_front() {
                cells.push((cx, cy));
                if cx == 0 || cy == 0 || cx == nx - 1 || cy == ny - 1 {
                    touches = true;
                }
                let neighbors = [
                    (cx.wrapping_sub(1), cy),
                    (cx + 1, cy),
                    (cx, cy.wrapping_sub(1)),
                    (cx, cy + 1),
                ];
                for (qx, qy) in neighbors {
                    if qx < nx && qy < ny && !seen[qy * nx + qx] && free(qx, qy) {
                        seen[qy * nx + qx] = true;
                        queue.push_back((qx, qy));
                    }
                }
            }
            out.push(GridComponent {
                cells,
                touches_boundary: touches,
            });
        }
    }
    out
}

/// L1 grid distance from every free cell to the nearest non-free cell
/// (multi-source BFS); non-free cells get 0. Cells outside the grid do not
/// count as blocked.
pub fn distance_to_blocked<F: Fn(usize, usize) -> bool>(nx: usize, ny: usize, free: F) -> Vec<u32> {
    let mut dist = vec![u32::MAX; nx * ny];
    let mut queue = std::collections::VecDeque::new();
    for iy in 0..ny {
        for ix in 0..nx {
            if !free(ix, iy) {
                dist[iy * nx + ix] = 0;
                queue.push_back((ix, iy));
            }
        }
    }
    while let Some((cx, cy)) = queue.pop_front() {
        let d = dist[cy * nx + cx];
        let neighbors = [
            (cx.wrapping_sub(1), cy),
            (cx + 1, cy),
            (cx, cy.wrapping_sub(1)),
            (cx, cy + 1),
        ];
        for (qx, qy) in neighbors {
            if qx < nx && qy < ny && dist[qy * nx + qx] == u32::MAX {
                dist[qy * nx + qx] = d + 1;
                queue.push_back((qx, qy));
            }
        }
    }
    dist
}
