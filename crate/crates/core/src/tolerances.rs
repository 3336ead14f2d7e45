//! Every numeric threshold used by the construction and the checks.

/// Construction identities: fixed points, overlap points, side equations.
pub const IDENTITY: f64 = 1e-12;

/// Similitude check `LᵀL = s²I`.
pub const SIMILITUDE: f64 = 1e-10;

/// Overlap points must sit on the hull sides within this distance.
pub const ON_SEGMENT: f64 = 1e-10;

/// Squared-length comparisons in triangle classification.
pub const CLASSIFY: f64 = 1e-9;

/// Default residual tolerance for the Moran equation.
pub const MORAN: f64 = 1e-12;

/// Floor on the achievable Moran residual: the objective is a sum of a few
/// `powf` terms, each carrying a couple of ulps of error.
pub const MORAN_ROUNDING_FLOOR: f64 = 64.0 * f64::EPSILON;

/// Iteration ceiling for the bisection solver.
pub const MORAN_MAX_ITER: usize = 200;

/// Default central finite-difference step.
pub const FD_STEP: f64 = 1e-5;

/// Eigenvalue sign threshold in critical point classification.
pub const EIGEN_SIGN: f64 = 1e-4;

/// OSC witness: image triangles may poke out of the hull by this much.
pub const OSC_CONTAINMENT: f64 = 1e-10;

/// OSC witness: pairwise image intersection area must stay below this.
pub const OSC_OVERLAP_AREA: f64 = 1e-12;

/// Tile and cover transform comparisons.
pub const TRANSFORM: f64 = 1e-10;

/// Tiling disjointness: relative overlap area.
pub const TILE_OVERLAP: f64 = 1e-10;

/// Algebraic condition search.
pub const ALGEBRAIC: f64 = 1e-9;
pub const ALGEBRAIC_MAX_EXPONENT: u32 = 12;

/// Default depth cap for covers and tilings (3^12 = 531441 pieces).
pub const DEPTH_CAP: usize = 12;

/// Default chaos-game burn-in.
pub const BURN_IN: usize = 20;
