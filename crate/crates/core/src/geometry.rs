//! Triangle parametrization of the `(a, b)` plane.
//!
//! The base `AB` is fixed to the unit segment from `A = (0,0)` to
//! `B = (1,0)`. Side `a` is `|BC|` and side `b` is `|AC|`, so the whole
//! triangle is determined by the pair `(a, b)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ifs::{scaling_ratios_raw, FamilyTag};
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn distance(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    #[inline]
    pub fn distance_squared(self, other: Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        Point2::new(self.x + t * (other.x - self.x), self.y + t * (other.y - self.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Side lengths of a non-degenerate triangle with unit base.
///
/// Construction through [`TriangleParams::new`] guarantees finite, positive
/// sides and a strictly positive vertex radicand, which is equivalent to the
/// strict triangle inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleParams {
    a: f64,
    b: f64,
}

impl TriangleParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidParams { a, b, reason: "side lengths must be finite".into() });
        }
        if a <= 0.0 || b <= 0.0 {
            return Err(Error::InvalidParams { a, b, reason: "side lengths must be positive".into() });
        }
        let radicand = vertex_radicand(a, b);
        if radicand <= 0.0 {
            return Err(Error::DegenerateTriangle { a, b, radicand });
        }
        Ok(Self { a, b })
    }

    /// Length of side `BC`.
    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Length of side `AC`.
    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    /// The hull vertices `(A, B, C)`.
    pub fn vertices(&self) -> [Point2; 3] {
        [Point2::ORIGIN, Point2::new(1.0, 0.0), vertex_c(*self)]
    }

    /// The same triangle with `a` and `b` exchanged (mirror about `x = 1/2`).
    pub fn swapped(&self) -> Self {
        Self { a: self.b, b: self.a }
    }
}

#[inline]
fn vertex_radicand(a: f64, b: f64) -> f64 {
    let u = b * b - a * a + 1.0;
    4.0 * b * b - u * u
}

/// Coordinates of the apex `C`, at distance `b` from `A` and `a` from `B`.
pub fn vertex_c(params: TriangleParams) -> Point2 {
    let (a, b) = (params.a, params.b);
    let u = b * b - a * a + 1.0;
    Point2::new(u / 2.0, vertex_radicand(a, b).sqrt() / 2.0)
}

/// Fallible variant of [`vertex_c`] for raw side lengths.
pub fn vertex_c_of(a: f64, b: f64) -> Result<Point2> {
    TriangleParams::new(a, b).map(vertex_c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleKind {
    Acute,
    Right,
    Obtuse,
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriangleKind::Acute => "acute",
            TriangleKind::Right => "right",
            TriangleKind::Obtuse => "obtuse",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleClass {
    pub kind: TriangleKind,
    /// Set when the vertex radicand is positive but below `tol`
    /// (numerically nearly collinear).
    pub degenerate: bool,
}

/// Classifies the triangle by comparing squared side lengths.
///
/// The three signed gaps `a²+b²-1`, `b²+1-a²` and `a²+1-b²` are the law of
/// cosines numerators at `C`, `A` and `B`. Any gap below `-tol` makes the
/// triangle obtuse, any gap within `tol` of zero makes it right.
pub fn classify(params: TriangleParams, tol: f64) -> TriangleClass {
    let (a2, b2) = (params.a * params.a, params.b * params.b);
    let gaps = [a2 + b2 - 1.0, b2 + 1.0 - a2, a2 + 1.0 - b2];
    let kind = if gaps.iter().any(|&g| g < -tol) {
        TriangleKind::Obtuse
    } else if gaps.iter().any(|&g| g.abs() <= tol) {
        TriangleKind::Right
    } else {
        TriangleKind::Acute
    };
    let degenerate = vertex_radicand(params.a, params.b) <= tol;
    TriangleClass { kind, degenerate }
}

/// Checks whether `family` admits a three-map attractor at `params`.
///
/// NNN and FNN are defined on every valid triangle. FFN needs `a²+b² > 1`
/// so that `γ > 0`. FFF needs a strictly acute triangle so that all three
/// ratios lie in `(0, 1)`. Right-angle boundaries are rejected (tolerance
/// [`tolerances::CLASSIFY`]).
pub fn family_domain(family: FamilyTag, params: TriangleParams) -> Result<()> {
    let tol = tolerances::CLASSIFY;
    let (a, b) = (params.a, params.b);
    let violation = |requirement| Err(Error::FamilyDomainViolation { family, a, b, requirement });
    match family {
        FamilyTag::Nnn | FamilyTag::Fnn => Ok(()),
        FamilyTag::Ffn => {
            if a * a + b * b - 1.0 > tol {
                Ok(())
            } else {
                violation("a^2 + b^2 > 1 (gamma > 0)")
            }
        }
        FamilyTag::Fff => {
            let (a2, b2) = (a * a, b * b);
            if a2 + b2 - 1.0 <= tol {
                return violation("a strictly acute triangle: a^2 + b^2 > 1 (gamma > 0)");
            }
            if b2 + 1.0 - a2 <= tol {
                return violation("a strictly acute triangle: b^2 + 1 > a^2 (alpha > 0)");
            }
            if a2 + 1.0 - b2 <= tol {
                return violation("a strictly acute triangle: a^2 + 1 > b^2 (beta > 0)");
            }
            let r = scaling_ratios_raw(family, params);
            if r.iter().all(|&s| s > 0.0 && s < 1.0) {
                Ok(())
            } else {
                violation("all three ratios in (0, 1)")
            }
        }
    }
}
