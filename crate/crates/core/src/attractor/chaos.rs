use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geometry::Point2;
use crate::ifs::SierpinskiIFS;
use crate::tolerances;

/// Generator behind every point cloud. Changing it changes every cloud.
pub const RNG_ALGORITHM: &str = "ChaCha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum MapWeighting {
    /// Map `i` chosen with probability proportional to `sᵢ²`.
    #[default]
    Area,
    Uniform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChaosOptions {
    pub n: usize,
    pub seed: u64,
    pub burn_in: usize,
    pub weighting: MapWeighting,
}

impl ChaosOptions {
    pub fn new(n: usize, seed: u64) -> Self {
        Self { n, seed, burn_in: tolerances::BURN_IN, weighting: MapWeighting::Area }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointCloud {
    pub points: Vec<Point2>,
    pub seed: u64,
    pub burn_in: usize,
}

/// Random orbit `x ← f_i(x)` from the origin; the first `burn_in` iterates
/// are discarded and the next `n` kept.
pub fn chaos_game(ifs: &SierpinskiIFS, opts: &ChaosOptions) -> PointCloud {
    let maps = ifs.maps();
    let weights = match opts.weighting {
        MapWeighting::Area => ifs.ratios().map(|s| s * s),
        MapWeighting::Uniform => [1.0; 3],
    };
    let total: f64 = weights.iter().sum();
    let thresholds = [weights[0] / total, (weights[0] + weights[1]) / total];

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut x = Point2::ORIGIN;
    let mut points = Vec::with_capacity(opts.n);
    for step in 0..opts.burn_in + opts.n {
        let u: f64 = rand::RngExt::random(&mut rng);
        let i = thresholds.iter().filter(|&&t| u >= t).count();
        x = maps[i].apply(x);
        if step >= opts.burn_in {
            points.push(x);
        }
    }
    PointCloud { points, seed: opts.seed, burn_in: opts.burn_in }
}
