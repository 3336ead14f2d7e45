//! Attractor approximations: deterministic subdivision covers, chaos-game
//! point clouds, Hausdorff distances, rasterization and image export.

mod chaos;
mod cover;
mod export;
mod hausdorff;
mod raster;

pub use chaos::{chaos_game, ChaosOptions, MapWeighting, PointCloud, RNG_ALGORITHM};
pub use cover::{convergence_probe, deterministic_cover, deterministic_cover_capped, CoverIndex, TriangleCover};
pub use export::{export_pgm, export_svg, parse_pgm, write_pgm, SvgShape, PALETTE};
pub use hausdorff::{directed_hausdorff, hausdorff_distance};
pub use raster::{rasterize, rasterize_supersampled, Bitmap, RasterSource, Viewport};
