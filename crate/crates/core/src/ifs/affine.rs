use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Planar affine map `x ↦ L·x + t` stored as explicit coefficients.
///
/// ```text
/// | m11  m12 |   | tx |
/// | m21  m22 | + | ty |
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMap2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
    pub tx: f64,
    pub ty: f64,
}

impl Default for AffineMap2 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl AffineMap2 {
    pub const IDENTITY: AffineMap2 = AffineMap2 { m11: 1.0, m12: 0.0, m21: 0.0, m22: 1.0, tx: 0.0, ty: 0.0 };

    #[inline]
    pub const fn new(m11: f64, m12: f64, m21: f64, m22: f64, tx: f64, ty: f64) -> Self {
        Self { m11, m12, m21, m22, tx, ty }
    }

    /// Uniform scaling by `s` about the origin.
    pub const fn scaling(s: f64) -> Self {
        Self::new(s, 0.0, 0.0, s, 0.0, 0.0)
    }

    /// Homothety with ratio `s` fixing `center`.
    pub fn homothety(s: f64, center: Point2) -> Self {
        Self::new(s, 0.0, 0.0, s, (1.0 - s) * center.x, (1.0 - s) * center.y)
    }

    /// Reflection-type similitude with linear part `[[q, p], [p, -q]]`.
    pub const fn flip(q: f64, p: f64, tx: f64, ty: f64) -> Self {
        Self::new(q, p, p, -q, tx, ty)
    }

    pub fn from_array(c: [f64; 6]) -> Self {
        Self::new(c[0], c[1], c[2], c[3], c[4], c[5])
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.m11, self.m12, self.m21, self.m22, self.tx, self.ty]
    }

    #[inline]
    pub fn apply(&self, p: Point2) -> Point2 {
        Point2::new(
            self.m11 * p.x + self.m12 * p.y + self.tx,
            self.m21 * p.x + self.m22 * p.y + self.ty,
        )
    }

    #[inline]
    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// `self ∘ inner`: apply `inner` first.
    #[inline]
    pub fn compose(&self, inner: &AffineMap2) -> AffineMap2 {
        compose(self, inner)
    }

    pub fn invert(&self) -> Result<AffineMap2> {
        invert(self)
    }

    /// Returns `s` when `LᵀL = s²·I` within `tol`, i.e. the map is a
    /// similitude with ratio `s`.
    pub fn similitude_ratio(&self, tol: f64) -> Option<f64> {
        let c11 = self.m11 * self.m11 + self.m21 * self.m21;
        let c22 = self.m12 * self.m12 + self.m22 * self.m22;
        let c12 = self.m11 * self.m12 + self.m21 * self.m22;
        let s2 = 0.5 * (c11 + c22);
        if (c11 - s2).abs() <= tol * s2.max(1.0) && c12.abs() <= tol * s2.max(1.0) {
            Some(s2.sqrt())
        } else {
            None
        }
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &AffineMap2) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &AffineMap2, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

/// `outer ∘ inner`, so that `apply(compose(f, g), p) = f(g(p))`.
pub fn compose(outer: &AffineMap2, inner: &AffineMap2) -> AffineMap2 {
    let o = outer;
    let i = inner;
    AffineMap2 {
        m11: o.m11 * i.m11 + o.m12 * i.m21,
        m12: o.m11 * i.m12 + o.m12 * i.m22,
        m21: o.m21 * i.m11 + o.m22 * i.m21,
        m22: o.m21 * i.m12 + o.m22 * i.m22,
        tx: o.m11 * i.tx + o.m12 * i.ty + o.tx,
        ty: o.m21 * i.tx + o.m22 * i.ty + o.ty,
    }
}

pub fn invert(map: &AffineMap2) -> Result<AffineMap2> {
    let det = map.det();
    if det == 0.0 || !det.is_finite() {
        return Err(Error::SingularMap { det });
    }
    let m11 = map.m22 / det;
    let m12 = -map.m12 / det;
    let m21 = -map.m21 / det;
    let m22 = map.m11 / det;
    Ok(AffineMap2 {
        m11,
        m12,
        m21,
        m22,
        tx: -(m11 * map.tx + m12 * map.ty),
        ty: -(m21 * map.tx + m22 * map.ty),
    })
}
