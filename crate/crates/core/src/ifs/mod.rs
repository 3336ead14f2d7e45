//! The four generalised Sierpinski iterated function systems.
//!
//! Every family has three similitudes `f_A`, `f_B`, `f_C` fixing the hull
//! vertices `A = (0,0)`, `B = (1,0)` and `C`. A family tag spells out which
//! of them reverse orientation: NNN has none, FNN flips `f_A`, FFN flips
//! `f_A` and `f_B`, FFF flips all three. Ratios follow from requiring the
//! three images of the hull to tile its sides.

mod affine;
mod osc;
mod serialize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use affine::{compose, invert, AffineMap2};
pub use osc::{osc_witness, osc_witness_maps, ContainmentWitness, OscReport, OverlapWitness};
pub use serialize::IfsRecord;

use crate::error::{Error, Result};
use crate::geometry::{family_domain, vertex_c, Point2, TriangleParams};
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    #[serde(rename = "NNN")]
    Nnn,
    #[serde(rename = "FNN")]
    Fnn,
    #[serde(rename = "FFN")]
    Ffn,
    #[serde(rename = "FFF")]
    Fff,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 4] = [FamilyTag::Nnn, FamilyTag::Fnn, FamilyTag::Ffn, FamilyTag::Fff];

    /// Which of `(f_A, f_B, f_C)` is a flip.
    pub const fn flips(self) -> [bool; 3] {
        match self {
            FamilyTag::Nnn => [false, false, false],
            FamilyTag::Fnn => [true, false, false],
            FamilyTag::Ffn => [true, true, false],
            FamilyTag::Fff => [true, true, true],
        }
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Nnn => "NNN",
            FamilyTag::Fnn => "FNN",
            FamilyTag::Ffn => "FFN",
            FamilyTag::Fff => "FFF",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NNN" => Ok(FamilyTag::Nnn),
            "FNN" => Ok(FamilyTag::Fnn),
            "FFN" => Ok(FamilyTag::Ffn),
            "FFF" => Ok(FamilyTag::Fff),
            other => Err(Error::Parse(format!("unknown family '{other}' (expected NNN, FNN, FFN or FFF)"))),
        }
    }
}

/// Ratio formulas without any domain check. Values may leave `(0, 1)`
/// outside the family domain.
pub(crate) fn scaling_ratios_raw(family: FamilyTag, params: TriangleParams) -> [f64; 3] {
    let (a, b) = (params.a(), params.b());
    let (a2, b2) = (a * a, b * b);
    match family {
        FamilyTag::Nnn => [0.5, 0.5, 0.5],
        FamilyTag::Fnn => {
            let d = b2 + 1.0;
            [b / d, 1.0 / d, b2 / d]
        }
        FamilyTag::Ffn => {
            let s = a2 + b2;
            [b / s, a / s, (s - 1.0) / s]
        }
        FamilyTag::Fff => [
            (-a2 + b2 + 1.0) / (2.0 * b),
            (a2 - b2 + 1.0) / (2.0 * a),
            (a2 + b2 - 1.0) / (2.0 * a * b),
        ],
    }
}

/// Scaling ratios `(α, β, γ)` of `(f_A, f_B, f_C)`.
pub fn scaling_ratios(family: FamilyTag, params: TriangleParams) -> Result<[f64; 3]> {
    family_domain(family, params)?;
    Ok(scaling_ratios_raw(family, params))
}

/// Residuals of the three side equations: each hull side is covered by the
/// two image sides lying on it.
pub fn side_equation_residuals(family: FamilyTag, params: TriangleParams, ratios: [f64; 3]) -> [f64; 3] {
    let (a, b) = (params.a(), params.b());
    let [al, be, ga] = ratios;
    match family {
        FamilyTag::Nnn => [al + be - 1.0, al * b + ga * b - b, be * a + ga * a - a],
        FamilyTag::Fnn => [al * b + be - 1.0, al + ga * b - b, be * a + ga * a - a],
        FamilyTag::Ffn => [al * b + be * a - 1.0, al + ga * b - b, be + ga * a - a],
        FamilyTag::Fff => [al * b + be * a - 1.0, al + ga * a - b, be + ga * b - a],
    }
}

/// Vertex indices into `(A, B, C)` and map indices into `(f_A, f_B, f_C)`.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

/// For each overlap point `(M, N, O)`, the two `(map, vertex)` pairs whose
/// images must coincide there.
fn overlap_pairs(family: FamilyTag) -> [[(usize, usize); 2]; 3] {
    match family {
        FamilyTag::Nnn => [[(A, C), (C, A)], [(A, B), (B, A)], [(B, C), (C, B)]],
        FamilyTag::Fnn => [[(A, B), (C, A)], [(A, C), (B, A)], [(B, C), (C, B)]],
        FamilyTag::Ffn => [[(A, B), (C, A)], [(A, C), (B, C)], [(B, A), (C, B)]],
        FamilyTag::Fff => [[(A, B), (C, B)], [(A, C), (B, C)], [(B, A), (C, A)]],
    }
}

const MAP_NAMES: [&str; 3] = ["f_A", "f_B", "f_C"];
const VERTEX_NAMES: [&str; 3] = ["A", "B", "C"];
const OVERLAP_NAMES: [&str; 3] = ["M", "N", "O"];

/// A generalised Sierpinski IFS together with its parameters and ratios.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SierpinskiIFS {
    family: FamilyTag,
    params: TriangleParams,
    maps: [AffineMap2; 3],
    ratios: [f64; 3],
}

/// Builds the three maps of `family` for the triangle `params`.
///
/// Non-flip maps are homotheties about their fixed vertex. Flip maps have
/// linear part `[[q, p], [p, -q]]`; `f_A` has no translation, while `f_B`
/// and the FFF `f_C` both send the origin to the overlap point `O` on `BC`.
pub fn build_ifs(family: FamilyTag, params: TriangleParams) -> Result<SierpinskiIFS> {
    let ratios = scaling_ratios(family, params)?;
    let [alpha, beta, gamma] = ratios;
    let (a, b) = (params.a(), params.b());
    let c = vertex_c(params);

    let flip_a = || {
        let k = alpha / b;
        AffineMap2::flip(k * c.x, k * c.y, 0.0, 0.0)
    };
    // f_B(A) = O = B + (β/a)(C - B)
    let k_b = beta / a;
    let o = Point2::new(1.0 - k_b * (1.0 - c.x), k_b * c.y);
    let flip_b = || AffineMap2::flip(k_b * (1.0 - c.x), -k_b * c.y, o.x, o.y);
    let flip_c = || {
        let k = alpha / b - k_b;
        AffineMap2::flip(k * c.x + (k_b - 1.0), k * c.y, o.x, o.y)
    };
    let fix_a = || AffineMap2::homothety(alpha, Point2::ORIGIN);
    let fix_b = || AffineMap2::homothety(beta, Point2::new(1.0, 0.0));
    let fix_c = || AffineMap2::homothety(gamma, c);

    let maps = match family {
        FamilyTag::Nnn => [fix_a(), fix_b(), fix_c()],
        FamilyTag::Fnn => [flip_a(), fix_b(), fix_c()],
        FamilyTag::Ffn => [flip_a(), flip_b(), fix_c()],
        FamilyTag::Fff => [flip_a(), flip_b(), flip_c()],
    };
    Ok(SierpinskiIFS { family, params, maps, ratios })
}

impl SierpinskiIFS {
    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn params(&self) -> TriangleParams {
        self.params
    }

    /// `(f_A, f_B, f_C)`.
    pub fn maps(&self) -> &[AffineMap2; 3] {
        &self.maps
    }

    /// Map for a tiling letter: 1 ↦ f_A, 2 ↦ f_B, 3 ↦ f_C.
    pub fn map_for_letter(&self, letter: u8) -> Option<&AffineMap2> {
        match letter {
            1..=3 => Some(&self.maps[usize::from(letter - 1)]),
            _ => None,
        }
    }

    /// `(α, β, γ)`.
    pub fn ratios(&self) -> [f64; 3] {
        self.ratios
    }

    pub fn max_ratio(&self) -> f64 {
        self.ratios.iter().copied().fold(0.0, f64::max)
    }

    /// Hull vertices `(A, B, C)`.
    pub fn vertices(&self) -> [Point2; 3] {
        self.params.vertices()
    }

    /// The three just-touching points `(M, N, O)`, each evaluated through
    /// both maps that meet there. Fails when the two evaluations disagree or
    /// the point is off its hull side (`M` on `AC`, `N` on `AB`, `O` on `BC`).
    pub fn overlap_points(&self) -> Result<[Point2; 3]> {
        let v = self.vertices();
        let tol = tolerances::IDENTITY * self.coordinate_scale();
        let pairs = overlap_pairs(self.family);
        let mut out = [Point2::ORIGIN; 3];
        for (k, [(m1, v1), (m2, v2)]) in pairs.into_iter().enumerate() {
            let p = self.maps[m1].apply(v[v1]);
            let q = self.maps[m2].apply(v[v2]);
            let residual = p.distance(q);
            if residual.is_nan() || residual > tol {
                return Err(Error::ConsistencyFailure {
                    identity: format!(
                        "{} = {}({}) = {}({})",
                        OVERLAP_NAMES[k], MAP_NAMES[m1], VERTEX_NAMES[v1], MAP_NAMES[m2], VERTEX_NAMES[v2]
                    ),
                    residual,
                });
            }
            out[k] = p;
        }
        // M on AC, N on AB, O on BC
        let sides = [(A, C), (A, B), (B, C)];
        for (k, (s0, s1)) in sides.into_iter().enumerate() {
            let residual = crate::polygon::distance_to_segment(out[k], v[s0], v[s1]);
            if residual.is_nan() || residual > tolerances::ON_SEGMENT * self.coordinate_scale() {
                return Err(Error::ConsistencyFailure {
                    identity: format!("{} on segment {}{}", OVERLAP_NAMES[k], VERTEX_NAMES[s0], VERTEX_NAMES[s1]),
                    residual,
                });
            }
        }
        Ok(out)
    }

    pub fn osc_witness(&self) -> OscReport {
        osc_witness(self)
    }

    /// Verifies every construction invariant: similitude structure with the
    /// expected ratio and orientation, fixed points at the vertices, the
    /// side equations, and the overlap identities.
    pub fn check_invariants(&self) -> Result<()> {
        let v = self.vertices();
        let scale = self.coordinate_scale();
        let flips = self.family.flips();
        for i in 0..3 {
            let map = &self.maps[i];
            let s = map.similitude_ratio(tolerances::SIMILITUDE).ok_or_else(|| Error::ConsistencyFailure {
                identity: format!("{} is a similitude", MAP_NAMES[i]),
                residual: f64::NAN,
            })?;
            let residual = (s - self.ratios[i]).abs();
            if residual.is_nan() || residual > tolerances::SIMILITUDE {
                return Err(Error::ConsistencyFailure {
                    identity: format!("ratio of {} equals tabulated ratio", MAP_NAMES[i]),
                    residual,
                });
            }
            if (map.det() < 0.0) != flips[i] {
                return Err(Error::ConsistencyFailure {
                    identity: format!("{} orientation ({})", MAP_NAMES[i], if flips[i] { "flip" } else { "non-flip" }),
                    residual: map.det(),
                });
            }
            let residual = map.apply(v[i]).distance(v[i]);
            if residual.is_nan() || residual > tolerances::IDENTITY * scale {
                return Err(Error::ConsistencyFailure {
                    identity: format!("{}({}) = {}", MAP_NAMES[i], VERTEX_NAMES[i], VERTEX_NAMES[i]),
                    residual,
                });
            }
        }
        for (k, r) in side_equation_residuals(self.family, self.params, self.ratios).into_iter().enumerate() {
            if r.is_nan() || r.abs() > tolerances::IDENTITY * scale {
                return Err(Error::ConsistencyFailure {
                    identity: format!("side equation {} ({})", k + 1, ["AB", "AC", "BC"][k]),
                    residual: r.abs(),
                });
            }
        }
        self.overlap_points().map(|_| ())
    }

    fn coordinate_scale(&self) -> f64 {
        self.params.a().max(self.params.b()).max(1.0)
    }
}
