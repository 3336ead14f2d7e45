use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::Point2;

/// `max_{x∈X} min_{y∈Y} |x − y|`; infinite when `Y` is empty.
pub fn directed_hausdorff(xs: &[Point2], ys: &[Point2]) -> f64 {
    xs.par_iter()
        .map(|&x| ys.iter().map(|&y| x.distance_squared(y)).fold(f64::INFINITY, f64::min))
        .reduce(|| 0.0, f64::max)
        .sqrt()
}

/// Exact Hausdorff distance between two finite point sets.
pub fn hausdorff_distance(xs: &[Point2], ys: &[Point2]) -> Result<f64> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(directed_hausdorff(xs, ys).max(directed_hausdorff(ys, xs)))
}
