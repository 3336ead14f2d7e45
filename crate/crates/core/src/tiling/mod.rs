//! Addresses over `{1,2,3}` and the finite tilings `T_{θ,k}` built from
//! them: each tile is `(f⁻¹)_{θ|k} ∘ f_ω` applied to the attractor, for
//! every word `ω` of length `k`.

mod algebraic;
mod word;

use rayon::prelude::*;
use serde::Serialize;

use crate::attractor::{export_svg, SvgShape};
use crate::error::{Error, Result};
use crate::ifs::{compose, invert, AffineMap2, SierpinskiIFS};
use crate::polygon::{area, triangle_intersection_area, Triangle};
use crate::tolerances;

pub use algebraic::{algebraic_condition, solve_fff_algebraic, PrototileSet};
pub use word::{ThetaStream, Word};

fn letter_map(ifs: &SierpinskiIFS, letter: u8) -> &AffineMap2 {
    &ifs.maps()[letter as usize - 1]
}

/// `f_{ω₁} ∘ f_{ω₂} ∘ … ∘ f_{ω_k}`; the identity for the empty word.
pub fn compose_word(ifs: &SierpinskiIFS, word: &Word) -> AffineMap2 {
    word.letters()
        .iter()
        .fold(AffineMap2::IDENTITY, |acc, &l| compose(&acc, letter_map(ifs, l)))
}

/// `f⁻¹_{θ₁} ∘ f⁻¹_{θ₂} ∘ … ∘ f⁻¹_{θ_k}`, the inverse of
/// `f_{θ_k} ∘ … ∘ f_{θ₁}`.
pub fn inverse_prefix(ifs: &SierpinskiIFS, theta: &ThetaStream, k: usize) -> Result<AffineMap2> {
    theta
        .prefix(k)?
        .letters()
        .iter()
        .try_fold(AffineMap2::IDENTITY, |acc, &l| Ok(compose(&acc, &invert(letter_map(ifs, l))?)))
}

fn ratio_product(ifs: &SierpinskiIFS, word: &Word) -> f64 {
    let r = ifs.ratios();
    word.letters().iter().map(|&l| r[l as usize - 1]).product()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tile {
    pub k: usize,
    pub word: Word,
    pub transform: AffineMap2,
    /// `∏ ratios(ω) / ∏ ratios(θ|k)`.
    pub scale: f64,
    /// Image of the hull under `transform`.
    pub outline: Triangle,
}

pub fn make_tile(ifs: &SierpinskiIFS, theta: &ThetaStream, k: usize, word: &Word) -> Result<Tile> {
    if word.len() != k {
        return Err(Error::WordLengthMismatch { expected: k, actual: word.len() });
    }
    let expand = inverse_prefix(ifs, theta, k)?;
    let theta_scale = ratio_product(ifs, &theta.prefix(k)?);
    Ok(tile_from(ifs, k, word.clone(), &expand, theta_scale, compose_word(ifs, word)))
}

fn tile_from(ifs: &SierpinskiIFS, k: usize, word: Word, expand: &AffineMap2, theta_scale: f64, f_w: AffineMap2) -> Tile {
    let transform = compose(expand, &f_w);
    let scale = ratio_product(ifs, &word) / theta_scale;
    let outline = ifs.vertices().map(|p| transform.apply(p));
    Tile { k, word, transform, scale, outline }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tiling {
    pub theta: ThetaStream,
    pub k: usize,
    /// One tile per word of length `k`, lexicographic.
    pub tiles: Vec<Tile>,
}

/// `T_{θ,k}` with the default depth cap.
pub fn make_tiling(ifs: &SierpinskiIFS, theta: &ThetaStream, k: usize) -> Result<Tiling> {
    make_tiling_capped(ifs, theta, k, tolerances::DEPTH_CAP)
}

pub fn make_tiling_capped(ifs: &SierpinskiIFS, theta: &ThetaStream, k: usize, cap: usize) -> Result<Tiling> {
    if k > cap {
        return Err(Error::DepthCap { requested: k, cap });
    }
    let expand = inverse_prefix(ifs, theta, k)?;
    let theta_scale = ratio_product(ifs, &theta.prefix(k)?);
    let words: Vec<Word> = Word::all_of_length(k).collect();
    let tiles = words
        .into_par_iter()
        .map(|w| {
            let f_w = compose_word(ifs, &w);
            tile_from(ifs, k, w, &expand, theta_scale, f_w)
        })
        .collect();
    Ok(Tiling { theta: theta.clone(), k, tiles })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DisjointnessReport {
    pub pairs_checked: usize,
    /// Largest `area(tᵢ ∩ tⱼ) / min(area(tᵢ), area(tⱼ))`.
    pub max_relative_overlap: f64,
    pub worst_pair: Option<(usize, usize)>,
    pub passed: bool,
}

/// Pairwise outline intersection areas, pruned by a sweep over x extents.
pub fn disjointness_report(tiling: &Tiling) -> DisjointnessReport {
    let tiles = &tiling.tiles;
    let extent = |t: &Triangle| {
        let lo = t.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
        let hi = t.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    };
    let mut order: Vec<(usize, f64, f64)> =
        tiles.iter().enumerate().map(|(i, t)| (i, extent(&t.outline).0, extent(&t.outline).1)).collect();
    order.sort_by(|x, y| x.1.total_cmp(&y.1));
    let areas: Vec<f64> = tiles.iter().map(|t| area(&t.outline)).collect();

    let (pairs_checked, worst) = (0..order.len())
        .into_par_iter()
        .map(|p| {
            let (i, _, hi) = order[p];
            let mut checked = 0usize;
            let mut worst = (0.0f64, None);
            for &(j, _, _) in order[p + 1..].iter().take_while(|o| o.1 <= hi) {
                checked += 1;
                let overlap = triangle_intersection_area(&tiles[i].outline, &tiles[j].outline);
                let rel = overlap / areas[i].min(areas[j]);
                if rel > worst.0 {
                    worst = (rel, Some((i.min(j), i.max(j))));
                }
            }
            (checked, worst)
        })
        .reduce(
            || (0, (0.0, None)),
            |a, b| (a.0 + b.0, if b.1 .0 > a.1 .0 { b.1 } else { a.1 }),
        );
    DisjointnessReport {
        pairs_checked,
        max_relative_overlap: worst.0,
        worst_pair: worst.1,
        passed: worst.0 < tolerances::TILE_OVERLAP,
    }
}

impl Tiling {
    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Distinct tile scales (relative tolerance 1e-9), largest first.
    pub fn scale_classes(&self) -> Vec<f64> {
        let mut scales: Vec<f64> = self.tiles.iter().map(|t| t.scale).collect();
        scales.sort_by(|a, b| b.total_cmp(a));
        scales.dedup_by(|x, y| (*x - *y).abs() <= 1e-9 * y.abs());
        scales
    }

    /// Class index of each tile: the rank of its scale in
    /// [`Tiling::scale_classes`].
    pub fn tile_classes(&self) -> Vec<usize> {
        let classes = self.scale_classes();
        self.tiles
            .iter()
            .map(|t| classes.iter().position(|c| (t.scale - c).abs() <= 1e-9 * c.abs()).unwrap_or(0))
            .collect()
    }

    /// Checks every tile transform against its stored scale and outline.
    pub fn check_tiles(&self, ifs: &SierpinskiIFS) -> Result<()> {
        for t in &self.tiles {
            let s = t.transform.similitude_ratio(tolerances::SIMILITUDE).ok_or_else(|| Error::ConsistencyFailure {
                identity: format!("tile {} is not a similitude", t.word),
                residual: f64::NAN,
            })?;
            let residual = (s - t.scale).abs();
            if residual > tolerances::TRANSFORM * t.scale.max(1.0) {
                return Err(Error::ConsistencyFailure { identity: format!("scale of tile {}", t.word), residual });
            }
            let hull = ifs.vertices();
            let residual = (0..3).map(|i| t.transform.apply(hull[i]).distance(t.outline[i])).fold(0.0, f64::max);
            if residual > tolerances::TRANSFORM {
                return Err(Error::ConsistencyFailure { identity: format!("outline of tile {}", t.word), residual });
            }
        }
        Ok(())
    }

    pub fn to_svg(&self) -> String {
        let shapes: Vec<SvgShape> = self
            .tiles
            .iter()
            .zip(self.tile_classes())
            .map(|(t, class)| SvgShape { outline: t.outline, class })
            .collect();
        export_svg(&shapes)
    }

    /// JSON manifest with one `{word, scale, class, transform, outline}`
    /// entry per tile.
    pub fn manifest(&self, ifs: &SierpinskiIFS, prototiles: Option<&PrototileSet>) -> serde_json::Value {
        let classes = self.tile_classes();
        let tiles: Vec<serde_json::Value> = self
            .tiles
            .iter()
            .zip(classes)
            .map(|(t, class)| {
                serde_json::json!({
                    "word": t.word.to_string(),
                    "scale": t.scale,
                    "class": class,
                    "transform": t.transform.to_array(),
                    "outline": t.outline.map(|p| [p.x, p.y]),
                })
            })
            .collect();
        serde_json::json!({
            "family": ifs.family().as_str(),
            "a": ifs.params().a(),
            "b": ifs.params().b(),
            "theta": self.theta.to_string(),
            "k": self.k,
            "scale_classes": self.scale_classes(),
            "prototiles": prototiles,
            "tiles": tiles,
        })
    }
}
