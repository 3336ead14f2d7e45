//! Small convex-polygon toolkit: orientation, containment, clipping and
//! point-to-triangle distance. Only what the overlap and containment checks
//! need.

use crate::geometry::Point2;

pub type Triangle = [Point2; 3];

#[inline]
fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Shoelace signed area; positive for counter-clockwise order.
pub fn signed_area(poly: &[Point2]) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    acc / 2.0
}

pub fn area(poly: &[Point2]) -> f64 {
    signed_area(poly).abs()
}

/// Returns the triangle in counter-clockwise order.
pub fn ccw(t: &Triangle) -> Triangle {
    if signed_area(t) < 0.0 {
        [t[0], t[2], t[1]]
    } else {
        *t
    }
}

/// Whether `p` lies in the closed triangle, allowing an outward slack of
/// `tol` measured as distance to each edge line.
pub fn triangle_contains(t: &Triangle, p: Point2, tol: f64) -> bool {
    let t = ccw(t);
    for i in 0..3 {
        let a = t[i];
        let b = t[(i + 1) % 3];
        let len = a.distance(b);
        if len == 0.0 {
            continue;
        }
        // signed distance of p to the edge line, positive inside
        if cross(a, b, p) / len < -tol {
            return false;
        }
    }
    true
}

/// Euclidean distance from `p` to the closed triangle (0 inside).
pub fn distance_to_triangle(t: &Triangle, p: Point2) -> f64 {
    if triangle_contains(t, p, 0.0) {
        return 0.0;
    }
    (0..3)
        .map(|i| distance_to_segment(p, t[i], t[(i + 1) % 3]))
        .fold(f64::INFINITY, f64::min)
}

pub fn distance_to_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.distance(Point2::new(a.x + t * dx, a.y + t * dy))
}

/// Sutherland–Hodgman clip of `subject` against the convex CCW polygon
/// `clip`.
pub fn clip_convex(subject: &[Point2], clip: &[Point2]) -> Vec<Point2> {
    let mut output: Vec<Point2> = subject.to_vec();
    let n = clip.len();
    for i in 0..n {
        if output.is_empty() {
            break;
        }
        let a = clip[i];
        let b = clip[(i + 1) % n];
        let input = std::mem::take(&mut output);
        let m = input.len();
        for j in 0..m {
            let cur = input[j];
            let prev = input[(j + m - 1) % m];
            let cur_in = cross(a, b, cur) >= 0.0;
            let prev_in = cross(a, b, prev) >= 0.0;
            if cur_in {
                if !prev_in {
                    output.push(intersect(prev, cur, a, b));
                }
                output.push(cur);
            } else if prev_in {
                output.push(intersect(prev, cur, a, b));
            }
        }
    }
    output
}

fn intersect(p: Point2, q: Point2, a: Point2, b: Point2) -> Point2 {
    let cp = cross(a, b, p);
    let cq = cross(a, b, q);
    let denom = cp - cq;
    if denom == 0.0 {
        return q;
    }
    p.lerp(q, cp / denom)
}

/// Area of the intersection of two triangles (either orientation).
pub fn triangle_intersection_area(t1: &Triangle, t2: &Triangle) -> f64 {
    let (t1, t2) = (ccw(t1), ccw(t2));
    if !bboxes_overlap(&t1, &t2) {
        return 0.0;
    }
    area(&clip_convex(&t1, &t2))
}

fn bboxes_overlap(t1: &Triangle, t2: &Triangle) -> bool {
    let bb = |t: &Triangle| {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in t {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        (x0, y0, x1, y1)
    };
    let (a0, b0, a1, b1) = bb(t1);
    let (c0, d0, c1, d1) = bb(t2);
    a0 <= c1 && c0 <= a1 && b0 <= d1 && d0 <= b1
}

/// Interior angles at each vertex, in radians.
pub fn interior_angles(t: &Triangle) -> [f64; 3] {
    let angle = |p: Point2, q: Point2, r: Point2| {
        let (ux, uy) = (q.x - p.x, q.y - p.y);
        let (vx, vy) = (r.x - p.x, r.y - p.y);
        (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
    };
    [angle(t[0], t[1], t[2]), angle(t[1], t[2], t[0]), angle(t[2], t[0], t[1])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tri(p: [(f64, f64); 3]) -> Triangle {
        p.map(|(x, y)| Point2::new(x, y))
    }

    #[test]
    fn overlap_of_offset_unit_triangles() {
        let t1 = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        let t2 = tri([(0.5, 0.0), (1.5, 0.0), (0.5, 1.0)]);
        // the overlap is the triangle (0.5,0),(1,0),(0.5,0.5)
        assert_abs_diff_eq!(triangle_intersection_area(&t1, &t2), 0.125, epsilon = 1e-15);
        // orientation does not matter
        let t2r = [t2[2], t2[1], t2[0]];
        assert_abs_diff_eq!(triangle_intersection_area(&t1, &t2r), 0.125, epsilon = 1e-15);
    }

    #[test]
    fn edge_sharing_triangles_do_not_overlap() {
        let t1 = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        let t2 = tri([(1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert!(triangle_intersection_area(&t1, &t2) < 1e-15);
        assert_abs_diff_eq!(triangle_intersection_area(&t1, &t1), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn containment_and_distance() {
        let t = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        assert!(triangle_contains(&t, Point2::new(0.2, 0.2), 0.0));
        assert!(triangle_contains(&t, Point2::new(0.5, 0.5), 1e-12));
        assert!(!triangle_contains(&t, Point2::new(0.6, 0.6), 1e-12));
        assert_eq!(distance_to_triangle(&t, Point2::new(0.1, 0.1)), 0.0);
        assert_abs_diff_eq!(distance_to_triangle(&t, Point2::new(-1.0, 0.5)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(distance_to_triangle(&t, Point2::new(2.0, -1.0)), 2f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn right_isoceles_angles() {
        let a = interior_angles(&tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]));
        assert_abs_diff_eq!(a[0], std::f64::consts::FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(a[1], std::f64::consts::FRAC_PI_4, epsilon = 1e-15);
        assert_abs_diff_eq!(a.iter().sum::<f64>(), std::f64::consts::PI, epsilon = 1e-14);
    }
}
