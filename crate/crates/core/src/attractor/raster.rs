use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::polygon::Triangle;

use super::chaos::PointCloud;
use super::cover::TriangleCover;

/// Axis-aligned plane rectangle mapped onto a bitmap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Viewport {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Viewport {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Result<Self> {
        let finite = [xmin, ymin, xmax, ymax].iter().all(|v| v.is_finite());
        if !finite || xmax <= xmin || ymax <= ymin {
            return Err(Error::BadViewport(format!("{xmin} {ymin} {xmax} {ymax}")));
        }
        Ok(Self { xmin, ymin, xmax, ymax })
    }

    /// Bounding box of `points` grown by `margin` times its larger side.
    pub fn around(points: impl IntoIterator<Item = Point2>, margin: f64) -> Result<Self> {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let pad = margin * (x1 - x0).max(y1 - y0);
        Self::new(x0 - pad, y0 - pad, x1 + pad, y1 + pad)
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }
}

impl FromStr for Viewport {
    type Err = Error;

    /// Four decimals `xmin ymin xmax ymax`, separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<f64> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|_| Error::BadViewport(s.to_string())))
            .collect::<Result<_>>()?;
        match v[..] {
            [xmin, ymin, xmax, ymax] => Self::new(xmin, ymin, xmax, ymax),
            _ => Err(Error::BadViewport(s.to_string())),
        }
    }
}

impl fmt::Display for Viewport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.xmin, self.ymin, self.xmax, self.ymax)
    }
}

/// Greyscale coverage grid, row 0 at the top of the viewport. A pixel is
/// 255 when fully covered and 0 when empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Bitmap {
    width: usize,
    height: usize,
    viewport: Viewport,
    pixels: Vec<u8>,
}

impl Bitmap {
    pub fn blank(width: usize, height: usize, viewport: Viewport) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::BadViewport(format!("{width}x{height} pixels")));
        }
        Ok(Self { width, height, viewport, pixels: vec![0; width * height] })
    }

    pub(crate) fn from_pixels(width: usize, height: usize, viewport: Viewport, pixels: Vec<u8>) -> Result<Self> {
        let mut bm = Self::blank(width, height, viewport)?;
        if pixels.len() != width * height {
            return Err(Error::Parse(format!("expected {} pixels, got {}", width * height, pixels.len())));
        }
        bm.pixels = pixels;
        Ok(bm)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn viewport(&self) -> Viewport {
        self.viewport
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, col: usize, row: usize) -> u8 {
        self.pixels[row * self.width + col]
    }

    pub fn count_set(&self) -> usize {
        self.pixels.iter().filter(|&&v| v > 0).count()
    }

    /// Total coverage in pixel units (a half-covered pixel counts 0.5).
    pub fn coverage(&self) -> f64 {
        self.pixels.iter().map(|&v| v as f64 / 255.0).sum()
    }

    fn dx(&self) -> f64 {
        self.viewport.width() / self.width as f64
    }

    fn dy(&self) -> f64 {
        self.viewport.height() / self.height as f64
    }

    fn plot(&mut self, p: Point2) {
        let col = ((p.x - self.viewport.xmin) / self.dx()).floor();
        let row = ((self.viewport.ymax - p.y) / self.dy()).floor();
        if col >= 0.0 && row >= 0.0 && (col as usize) < self.width && (row as usize) < self.height {
            let i = row as usize * self.width + col as usize;
            self.pixels[i] = 255;
        }
    }

    /// Sets every pixel whose centre lies in the closed triangle.
    fn fill(&mut self, t: &Triangle) {
        let (dx, dy) = (self.dx(), self.dy());
        let vp = self.viewport;
        let y_lo = t.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
        let y_hi = t.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max);
        // row centres: y = ymax − (row + ½)·dy
        let row_first = ((vp.ymax - y_hi) / dy - 0.5).ceil().max(0.0) as usize;
        let row_last = ((vp.ymax - y_lo) / dy - 0.5).floor();
        if row_last < 0.0 {
            return;
        }
        let row_last = (row_last as usize).min(self.height - 1);
        for row in row_first..=row_last {
            let y = vp.ymax - (row as f64 + 0.5) * dy;
            let Some((xl, xr)) = span_at(t, y) else { continue };
            let c0 = ((xl - vp.xmin) / dx - 0.5).ceil().max(0.0) as usize;
            let c1 = ((xr - vp.xmin) / dx - 0.5).floor();
            if c1 < 0.0 {
                continue;
            }
            let c1 = (c1 as usize).min(self.width - 1);
            if c0 <= c1 {
                self.pixels[row * self.width + c0..=row * self.width + c1].fill(255);
            }
        }
    }
}

fn span_at(t: &Triangle, y: f64) -> Option<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..3 {
        let (p, q) = (t[i], t[(i + 1) % 3]);
        if (p.y - y) * (q.y - y) > 0.0 {
            continue;
        }
        if p.y == q.y {
            lo = lo.min(p.x.min(q.x));
            hi = hi.max(p.x.max(q.x));
        } else {
            let x = p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
            lo = lo.min(x);
            hi = hi.max(x);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

#[derive(Debug, Clone, Copy)]
pub enum RasterSource<'a> {
    Cover(&'a TriangleCover),
    Triangles(&'a [Triangle]),
    Points(&'a PointCloud),
}

pub fn rasterize(source: RasterSource<'_>, viewport: Viewport, width: usize, height: usize) -> Result<Bitmap> {
    let viewport = Viewport::new(viewport.xmin, viewport.ymin, viewport.xmax, viewport.ymax)?;
    let mut bm = Bitmap::blank(width, height, viewport)?;
    match source {
        RasterSource::Cover(c) => c.triangles().iter().for_each(|t| bm.fill(t)),
        RasterSource::Triangles(ts) => ts.iter().for_each(|t| bm.fill(t)),
        RasterSource::Points(cloud) => cloud.points.iter().for_each(|&p| bm.plot(p)),
    }
    Ok(bm)
}

/// Renders at `factor`× resolution and box-filters down, giving grey
/// levels on partially covered pixels.
pub fn rasterize_supersampled(
    source: RasterSource<'_>,
    viewport: Viewport,
    width: usize,
    height: usize,
    factor: usize,
) -> Result<Bitmap> {
    if factor <= 1 {
        return rasterize(source, viewport, width, height);
    }
    let fine = rasterize(source, viewport, width * factor, height * factor)?;
    let mut out = Bitmap::blank(width, height, fine.viewport)?;
    let samples = (factor * factor) as u32;
    for row in 0..height {
        for col in 0..width {
            let mut acc = 0u32;
            for sy in 0..factor {
                for sx in 0..factor {
                    acc += fine.get(col * factor + sx, row * factor + sy) as u32;
                }
            }
            out.pixels[row * width + col] = ((acc + samples / 2) / samples) as u8;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attractor::deterministic_cover;
    use crate::geometry::TriangleParams;
    use crate::ifs::{build_ifs, FamilyTag};

    fn unit() -> Viewport {
        Viewport::new(0.0, 0.0, 1.0, 1.0).unwrap()
    }

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn viewport_parsing() {
        assert_eq!("0 0 1 1".parse::<Viewport>().unwrap(), unit());
        assert_eq!("-0.5, 0, 1.5, 1".parse::<Viewport>().unwrap().xmin, -0.5);
        assert!(matches!("0 0 1".parse::<Viewport>(), Err(Error::BadViewport(_))));
        assert!(matches!("0 0 0 1".parse::<Viewport>(), Err(Error::BadViewport(_))));
        assert!(matches!("0 0 x 1".parse::<Viewport>(), Err(Error::BadViewport(_))));
    }

    #[test]
    fn big_triangle_covers_everything() {
        let t = [p(-1.0, -1.0), p(3.0, -1.0), p(-1.0, 3.0)];
        let bm = rasterize(RasterSource::Triangles(&[t]), unit(), 16, 8).unwrap();
        assert_eq!(bm.count_set(), 128);
    }

    #[test]
    fn empty_cloud_is_blank() {
        let cloud = PointCloud { points: vec![], seed: 0, burn_in: 0 };
        let bm = rasterize(RasterSource::Points(&cloud), unit(), 4, 4).unwrap();
        assert_eq!(bm.count_set(), 0);
        assert!(rasterize(RasterSource::Points(&cloud), unit(), 0, 4).is_err());
    }

    #[test]
    fn points_land_top_down() {
        let cloud = PointCloud { points: vec![p(0.1, 0.9), p(0.9, 0.1), p(5.0, 5.0)], seed: 0, burn_in: 0 };
        let bm = rasterize(RasterSource::Points(&cloud), unit(), 2, 2).unwrap();
        assert_eq!(bm.pixels(), &[255, 0, 0, 255]);
    }

    #[test]
    fn lower_left_half() {
        // pixel centres strictly below the diagonal y = x
        let t = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)];
        let bm = rasterize(RasterSource::Triangles(&[t]), unit(), 4, 4).unwrap();
        let expected = [0, 0, 0, 255, 0, 0, 255, 255, 0, 255, 255, 255, 255, 255, 255, 255];
        assert_eq!(bm.pixels(), &expected);
    }

    #[test]
    fn depth_eight_area_fraction() {
        let f = build_ifs(FamilyTag::Nnn, TriangleParams::new(1.0, 1.0).unwrap()).unwrap();
        let vp = Viewport::new(0.0, 0.0, 1.0, 1.0).unwrap();
        let hull = rasterize(RasterSource::Triangles(&[f.vertices()]), vp, 512, 512).unwrap();
        let cover = deterministic_cover(&f, 8).unwrap();
        let bm = rasterize(RasterSource::Cover(&cover), vp, 512, 512).unwrap();
        let fraction = bm.count_set() as f64 / hull.count_set() as f64;
        assert!((fraction - 0.75f64.powi(8)).abs() <= 0.02, "{fraction}");
    }

    #[test]
    fn supersampling_grades_edges() {
        let t = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)];
        let bm = rasterize_supersampled(RasterSource::Triangles(&[t]), unit(), 4, 4, 2).unwrap();
        assert_eq!(bm.get(3, 3), 255);
        assert_eq!(bm.get(0, 0), 0);
        assert_eq!(bm.get(1, 2), 191);
        assert!((bm.coverage() - 8.0).abs() <= 1.0);
    }
}
