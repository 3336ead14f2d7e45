//! Level-one open set condition witness with the open hull as the open set.

use serde::Serialize;

use super::{AffineMap2, SierpinskiIFS};
use crate::geometry::Point2;
use crate::polygon::{self, Triangle};
use crate::tolerances;

/// An image vertex found outside the hull.
#[derive(Debug, Clone, Serialize)]
pub struct ContainmentWitness {
    pub map: usize,
    pub vertex: usize,
    pub point: Point2,
    pub distance_outside: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OverlapWitness {
    pub first: usize,
    pub second: usize,
    pub area: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OscReport {
    pub passed: bool,
    /// Image vertices lying outside the closed hull.
    pub containment_failures: Vec<ContainmentWitness>,
    /// Intersection area for every pair of image triangles.
    pub pair_overlaps: Vec<OverlapWitness>,
}

impl OscReport {
    pub fn max_overlap(&self) -> f64 {
        self.pair_overlaps.iter().map(|w| w.area).fold(0.0, f64::max)
    }
}

pub fn osc_witness(ifs: &SierpinskiIFS) -> OscReport {
    osc_witness_maps(&ifs.vertices(), ifs.maps())
}

/// Checks `f_i(hull) ⊂ hull` (vertex containment in the closure) and
/// pairwise interior disjointness of the image triangles.
pub fn osc_witness_maps(hull: &Triangle, maps: &[AffineMap2]) -> OscReport {
    let images: Vec<Triangle> = maps.iter().map(|f| hull.map(|p| f.apply(p))).collect();

    let mut containment_failures = Vec::new();
    for (i, img) in images.iter().enumerate() {
        for (k, &p) in img.iter().enumerate() {
            if !polygon::triangle_contains(hull, p, tolerances::OSC_CONTAINMENT) {
                containment_failures.push(ContainmentWitness {
                    map: i,
                    vertex: k,
                    point: p,
                    distance_outside: polygon::distance_to_triangle(hull, p),
                });
            }
        }
    }

    let mut pair_overlaps = Vec::new();
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            pair_overlaps.push(OverlapWitness {
                first: i,
                second: j,
                area: polygon::triangle_intersection_area(&images[i], &images[j]),
            });
        }
    }

    let passed = containment_failures.is_empty()
        && pair_overlaps.iter().all(|w| w.area < tolerances::OSC_OVERLAP_AREA);
    OscReport { passed, containment_failures, pair_overlaps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_ifs, FamilyTag, TriangleParams};

    #[test]
    fn equilateral_sierpinski_passes() {
        let ifs = build_ifs(FamilyTag::Nnn, TriangleParams::new(1.0, 1.0).unwrap()).unwrap();
        let report = ifs.osc_witness();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.pair_overlaps.len(), 3);
    }

    #[test]
    fn ffn_polygon_clipping_oracle() {
        let ifs = build_ifs(FamilyTag::Ffn, TriangleParams::new(1.1, 0.9).unwrap()).unwrap();
        let report = ifs.osc_witness();
        assert!(report.passed, "{report:?}");
        assert!(report.max_overlap() < 1e-12);
    }

    #[test]
    fn duplicated_map_fails() {
        let ifs = build_ifs(FamilyTag::Nnn, TriangleParams::new(1.0, 1.0).unwrap()).unwrap();
        let f = ifs.maps();
        let report = osc_witness_maps(&ifs.vertices(), &[f[0], f[0], f[2]]);
        assert!(!report.passed);
        // two identical half-size copies overlap in a quarter of the hull
        let hull_area = crate::polygon::area(&ifs.vertices());
        assert!((report.pair_overlaps[0].area - hull_area / 4.0).abs() < 1e-12);
    }

    #[test]
    fn escaping_image_fails_containment() {
        let ifs = build_ifs(FamilyTag::Nnn, TriangleParams::new(1.0, 1.0).unwrap()).unwrap();
        let shifted = AffineMap2::new(0.5, 0.0, 0.0, 0.5, -0.25, 0.0);
        let report = osc_witness_maps(&ifs.vertices(), &[shifted, ifs.maps()[1], ifs.maps()[2]]);
        assert!(!report.passed);
        assert!(!report.containment_failures.is_empty());
    }
}
