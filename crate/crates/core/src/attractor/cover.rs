use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::ifs::{compose, AffineMap2, SierpinskiIFS};
use crate::polygon::{distance_to_triangle, Triangle};
use crate::tolerances;

use super::hausdorff::directed_hausdorff;

/// The `3^depth` images of the hull under every word of length `depth`.
#[derive(Debug, Clone)]
pub struct TriangleCover {
    depth: usize,
    transforms: Vec<AffineMap2>,
    triangles: Vec<Triangle>,
}

impl TriangleCover {
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `f_ω` for each word `ω`, lexicographic (letter 1 first).
    pub fn transforms(&self) -> &[AffineMap2] {
        &self.transforms
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Letters of the word at `index`: the base-3 digits of `index`,
    /// most significant first, shifted to the alphabet `{1,2,3}`.
    pub fn word_letters(&self, index: usize) -> Vec<u8> {
        let mut letters = vec![1u8; self.depth];
        let mut rest = index;
        for slot in letters.iter_mut().rev() {
            *slot = (rest % 3) as u8 + 1;
            rest /= 3;
        }
        letters
    }

    /// All triangle vertices, three per triangle, shared corners repeated.
    pub fn vertices(&self) -> Vec<Point2> {
        self.triangles.iter().flatten().copied().collect()
    }
}

/// [`deterministic_cover_capped`] with the default depth cap.
pub fn deterministic_cover(ifs: &SierpinskiIFS, depth: usize) -> Result<TriangleCover> {
    deterministic_cover_capped(ifs, depth, tolerances::DEPTH_CAP)
}

pub fn deterministic_cover_capped(ifs: &SierpinskiIFS, depth: usize, cap: usize) -> Result<TriangleCover> {
    if depth > cap {
        return Err(Error::DepthCap { requested: depth, cap });
    }
    let maps = *ifs.maps();
    let mut transforms = vec![AffineMap2::IDENTITY];
    for _ in 0..depth {
        transforms = transforms
            .par_iter()
            .flat_map_iter(|w| maps.iter().map(move |f| compose(w, f)))
            .collect();
    }
    let hull = ifs.vertices();
    let triangles = transforms.par_iter().map(|t| hull.map(|p| t.apply(p))).collect();
    Ok(TriangleCover { depth, transforms, triangles })
}

/// `d_H(V_{j−1}, V_j)` for `j = 1..=k`, where `V_j` is the vertex set of
/// the depth-`j` cover. Each step contracts by roughly the largest ratio.
pub fn convergence_probe(ifs: &SierpinskiIFS, k: usize) -> Result<Vec<f64>> {
    if k > tolerances::DEPTH_CAP {
        return Err(Error::DepthCap { requested: k, cap: tolerances::DEPTH_CAP });
    }
    let mut previous = deterministic_cover(ifs, 0)?.vertices();
    let mut out = Vec::with_capacity(k);
    for j in 1..=k {
        let current = deterministic_cover(ifs, j)?.vertices();
        // V_{j−1} ⊆ V_j since each map fixes its own vertex
        let d = directed_hausdorff(&current, &previous).max(directed_hausdorff(&previous, &current));
        out.push(d);
        previous = current;
    }
    Ok(out)
}

/// Uniform-grid bucket index over a cover for fast point-to-cover distance
/// queries.
pub struct CoverIndex<'a> {
    triangles: &'a [Triangle],
    origin: Point2,
    cell: f64,
    cols: usize,
    rows: usize,
    buckets: Vec<Vec<u32>>,
    slack: f64,
}

impl<'a> CoverIndex<'a> {
    /// Buckets each triangle's bounding box grown by `slack`; queries are
    /// exact for distances up to `slack`.
    pub fn new(cover: &'a TriangleCover, slack: f64) -> Self {
        let triangles = cover.triangles();
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in triangles.iter().flatten() {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let (x0, y0) = (x0 - slack, y0 - slack);
        let span = (x1 + slack - x0).max(y1 + slack - y0).max(f64::MIN_POSITIVE);
        let n = ((triangles.len() as f64).sqrt().ceil() as usize).clamp(1, 1024);
        let cell = span / n as f64;
        let (cols, rows) = (n + 1, n + 1);
        let mut buckets = vec![Vec::new(); cols * rows];
        let clamp = |v: f64, m: usize| (v.max(0.0) as usize).min(m - 1);
        for (i, t) in triangles.iter().enumerate() {
            let lo_x = t.iter().map(|p| p.x).fold(f64::INFINITY, f64::min) - slack;
            let hi_x = t.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max) + slack;
            let lo_y = t.iter().map(|p| p.y).fold(f64::INFINITY, f64::min) - slack;
            let hi_y = t.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max) + slack;
            for cy in clamp((lo_y - y0) / cell, rows)..=clamp((hi_y - y0) / cell, rows) {
                for cx in clamp((lo_x - x0) / cell, cols)..=clamp((hi_x - x0) / cell, cols) {
                    buckets[cy * cols + cx].push(i as u32);
                }
            }
        }
        Self { triangles, origin: Point2::new(x0, y0), cell, cols, rows, buckets, slack }
    }

    /// Distance from `p` to the cover, or `None` when it exceeds the slack
    /// the index was built with.
    pub fn distance(&self, p: Point2) -> Option<f64> {
        let cx = ((p.x - self.origin.x) / self.cell).floor();
        let cy = ((p.y - self.origin.y) / self.cell).floor();
        if !(cx >= 0.0 && cy >= 0.0 && (cx as usize) < self.cols && (cy as usize) < self.rows) {
            return None;
        }
        let bucket = &self.buckets[cy as usize * self.cols + cx as usize];
        let d = bucket
            .iter()
            .map(|&i| distance_to_triangle(&self.triangles[i as usize], p))
            .fold(f64::INFINITY, f64::min);
        (d <= self.slack).then_some(d)
    }

    pub fn contains(&self, p: Point2) -> bool {
        self.distance(p).is_some()
    }
}
