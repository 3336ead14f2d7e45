//! Generalised Sierpinski triangles.
//!
//! Builds the four three-map iterated function systems (NNN, FNN, FFN, FFF)
//! whose fixed points are the vertices of a triangle with base `(0,0)-(1,0)`
//! and side lengths `a = |BC|`, `b = |AC|`. On top of the construction the
//! crate provides attractor rendering (deterministic covers and the chaos
//! game), similarity dimension via the Moran equation together with the
//! dimension-landscape probes, and finite fractal tilings of the plane.
//!
//! ```
//! use sierpinski::{build_ifs, dimension_of, FamilyTag, TriangleParams};
//!
//! let params = TriangleParams::new(1.1, 0.9).unwrap();
//! let ifs = build_ifs(FamilyTag::Fnn, params).unwrap();
//! let sample = dimension_of(FamilyTag::Fnn, params, 1e-12).unwrap();
//! assert!(sample.d > 1.58 && sample.d < 2.0);
//! assert_eq!(ifs.maps().len(), 3);
//! ```

pub mod attractor;
pub mod cli;
pub mod dimension;
mod error;
pub mod format;
pub mod geometry;
pub mod ifs;
pub mod polygon;
pub mod tiling;
pub mod tolerances;

pub use attractor::{
    chaos_game, convergence_probe, deterministic_cover, export_pgm, export_svg, hausdorff_distance,
    parse_pgm, rasterize, Bitmap, ChaosOptions, PointCloud, RasterSource, TriangleCover, Viewport,
};
pub use dimension::{
    critical_point_check, dimension_limit, dimension_of, fnn_implicit_derivative, moran_dimension,
    scan_1d, scan_2d, CriticalPointReport, DimensionSample, PointClass, ScanRecord,
};
pub use error::{Error, Result};
pub use geometry::{classify, family_domain, vertex_c, Point2, TriangleClass, TriangleKind, TriangleParams};
pub use ifs::{build_ifs, scaling_ratios, AffineMap2, FamilyTag, OscReport, SierpinskiIFS};
pub use tiling::{
    algebraic_condition, disjointness_report, make_tile, make_tiling, solve_fff_algebraic,
    PrototileSet, ThetaStream, Tile, Tiling, Word,
};
