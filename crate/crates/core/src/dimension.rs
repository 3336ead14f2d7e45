//! Similarity dimension from the Moran equation `Σ sᵢ^d = 1`, and the
//! probes used to explore how it varies over the `(a, b)` plane.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::sig17;
use crate::geometry::{family_domain, TriangleParams};
use crate::ifs::{scaling_ratios, scaling_ratios_raw, FamilyTag};
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionSample {
    pub a: f64,
    pub b: f64,
    pub d: f64,
    /// `|Σ sᵢ^d − 1|` at the returned `d`.
    pub residual: f64,
}

/// Result of one Moran solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoranSolution {
    pub d: f64,
    pub residual: f64,
    pub iterations: usize,
}

fn moran_objective(ratios: &[f64], d: f64) -> f64 {
    ratios.iter().map(|s| s.powf(d)).sum::<f64>() - 1.0
}

/// Solves `Σ sᵢ^d = 1` by bisection on `(0, 2]`, widening to `(0, 4]` when
/// `d = 2` still leaves the sum above one.
///
/// Zero ratios contribute nothing and are skipped. The objective is strictly
/// decreasing in `d`, so the root is unique. The loop stops once the residual
/// is within `tol` or the bracket cannot be halved any further; tolerances
/// below the rounding floor of the objective are raised to that floor.
pub fn moran_solve(ratios: &[f64], tol: f64) -> Result<MoranSolution> {
    for (index, &value) in ratios.iter().enumerate() {
        if !(value.is_finite() && (0.0..1.0).contains(&value)) {
            return Err(Error::InvalidRatio { index, value });
        }
    }
    let positive: Vec<f64> = ratios.iter().copied().filter(|&s| s > 0.0).collect();
    let g = |d: f64| moran_objective(&positive, d);

    // g(0+) = (#positive − 1), so a bracket needs two positive ratios.
    if positive.len() < 2 {
        return Err(Error::BracketFailure { upper: 2.0 });
    }
    let mut lo = 0.0_f64;
    let mut hi = 2.0_f64;
    let mut g_hi = g(hi);
    if g_hi > 0.0 {
        hi = 4.0;
        g_hi = g(hi);
        if g_hi > 0.0 {
            return Err(Error::BracketFailure { upper: hi });
        }
    }
    if g_hi.abs() <= tol {
        return Ok(MoranSolution { d: hi, residual: g_hi.abs(), iterations: 0 });
    }

    let mut best = (hi, g_hi.abs());
    let mut iterations = 0;
    while iterations < tolerances::MORAN_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let gm = g(mid);
        if gm.abs() < best.1 {
            best = (mid, gm.abs());
        }
        if gm.abs() <= tol {
            return Ok(MoranSolution { d: mid, residual: gm.abs(), iterations });
        }
        if gm > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (d, residual) = best;
    let floor = tol.max(tolerances::MORAN_ROUNDING_FLOOR);
    if residual <= floor {
        Ok(MoranSolution { d, residual, iterations })
    } else {
        Err(Error::NoConvergence { residual, tol })
    }
}

/// The similarity dimension for the given ratios.
pub fn moran_dimension(ratios: &[f64], tol: f64) -> Result<f64> {
    moran_solve(ratios, tol).map(|s| s.d)
}

/// Dimension of the attractor of `family` at `params`.
pub fn dimension_of(family: FamilyTag, params: TriangleParams, tol: f64) -> Result<DimensionSample> {
    let ratios = scaling_ratios(family, params)?;
    let sol = moran_solve(&ratios, tol)?;
    Ok(DimensionSample { a: params.a(), b: params.b(), d: sol.d, residual: sol.residual })
}

/// Like [`dimension_of`], but also evaluates the right-angle boundary of
/// FFN and FFF, where `γ` vanishes. Ratios within
/// [`tolerances::CLASSIFY`] of zero are dropped; clearly negative ratios
/// still fail with the family's domain error.
pub fn dimension_limit(family: FamilyTag, params: TriangleParams, tol: f64) -> Result<DimensionSample> {
    let mut ratios = scaling_ratios_raw(family, params);
    for s in ratios.iter_mut() {
        if s.abs() <= tolerances::CLASSIFY {
            *s = 0.0;
        }
    }
    if ratios.iter().any(|&s| s < 0.0) {
        family_domain(family, params)?;
    }
    let sol = moran_solve(&ratios, tol)?;
    Ok(DimensionSample { a: params.a(), b: params.b(), d: sol.d, residual: sol.residual })
}

/// `dd/db` for the FNN family, from implicit differentiation of
/// `r₁^d + r₂^d + r₃^d = 1` with `r = (b, 1, b²)/(b²+1)`.
///
/// `d` must be the solved dimension at `b`.
pub fn fnn_implicit_derivative(b: f64, d: f64) -> f64 {
    let q = b * b + 1.0;
    let (r1, r2, r3) = (b / q, 1.0 / q, b * b / q);
    let (p1, p2, p3) = (r1.powf(d), r2.powf(d), r3.powf(d));
    let numerator = d * (-p1 - 2.0 * p3 + b * b * (2.0 * p2 + p1));
    let denominator = (b * b * b + b) * (p2 * r2.ln() + p1 * r1.ln() + p3 * r3.ln());
    numerator / denominator
}

/// One grid point of a scan: a solved sample or a gap outside the domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ScanRecord {
    Sample(DimensionSample),
    Gap { a: f64, b: f64, reason: String },
}

impl ScanRecord {
    pub fn sample(&self) -> Option<&DimensionSample> {
        match self {
            ScanRecord::Sample(s) => Some(s),
            ScanRecord::Gap { .. } => None,
        }
    }

    pub fn coords(&self) -> (f64, f64) {
        match self {
            ScanRecord::Sample(s) => (s.a, s.b),
            ScanRecord::Gap { a, b, .. } => (*a, *b),
        }
    }
}

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        n => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Side `a` used by [`scan_1d`] when none is fixed: `max(b, 1)` always
/// closes a valid triangle with base 1 and side `b`.
pub fn companion_side(b: f64) -> f64 {
    b.max(1.0)
}

fn evaluate(family: FamilyTag, a: f64, b: f64, tol: f64) -> ScanRecord {
    if family == FamilyTag::Ffn && a.hypot(b - 1.0) < 1e-6 {
        return ScanRecord::Gap {
            a,
            b,
            reason: "discontinuity at (a,b)=(0,1): limit 1 from obtuse side, 2 along a^2+b^2=1".into(),
        };
    }
    match TriangleParams::new(a, b).and_then(|p| dimension_of(family, p, tol)) {
        Ok(s) => ScanRecord::Sample(s),
        Err(e) => ScanRecord::Gap { a, b, reason: e.to_string() },
    }
}

/// Sweeps `b` over `steps` evenly spaced points of `[b_min, b_max]` with
/// `a` fixed (or chosen by [`companion_side`] when `fixed_a` is `None`).
pub fn scan_1d(
    family: FamilyTag,
    b_min: f64,
    b_max: f64,
    steps: usize,
    fixed_a: Option<f64>,
    tol: f64,
) -> Vec<ScanRecord> {
    grid(b_min, b_max, steps)
        .into_par_iter()
        .map(|b| evaluate(family, fixed_a.unwrap_or_else(|| companion_side(b)), b, tol))
        .collect()
}

/// Sweeps an `(a, b)` grid. Records are row-major with `a` as the row
/// (outer) index and `b` as the column (inner) index.
pub fn scan_2d(
    family: FamilyTag,
    a_range: (f64, f64),
    b_range: (f64, f64),
    steps: (usize, usize),
    tol: f64,
) -> Vec<ScanRecord> {
    let a_values = grid(a_range.0, a_range.1, steps.0);
    let b_values = grid(b_range.0, b_range.1, steps.1);
    let cells: Vec<(f64, f64)> = a_values.iter().flat_map(|&a| b_values.iter().map(move |&b| (a, b))).collect();
    cells.into_par_iter().map(|(a, b)| evaluate(family, a, b, tol)).collect()
}

/// Lowest solved sample of a scan.
pub fn scan_minimum(records: &[ScanRecord]) -> Option<(usize, DimensionSample)> {
    records
        .iter()
        .enumerate()
        .filter_map(|(i, r)| r.sample().map(|s| (i, *s)))
        .min_by(|x, y| x.1.d.total_cmp(&y.1.d))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes `a,b,dimension,residual,reason`. Sample rows leave `reason`
/// empty; gap rows carry `nan` in both numeric columns.
pub fn write_csv<W: Write>(records: &[ScanRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "a,b,dimension,residual,reason")?;
    for r in records {
        match r {
            ScanRecord::Sample(s) => {
                writeln!(out, "{},{},{},{},", sig17(s.a), sig17(s.b), sig17(s.d), sig17(s.residual))?
            }
            ScanRecord::Gap { a, b, reason } => {
                writeln!(out, "{},{},nan,nan,{}", sig17(*a), sig17(*b), csv_field(reason))?
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PointClass {
    Min,
    Max,
    Saddle,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalPointReport {
    pub location: (f64, f64),
    /// Central-difference `(∂d/∂a, ∂d/∂b)`.
    pub gradient: [f64; 2],
    /// Hessian eigenvalues, ascending.
    pub hessian_eigs: [f64; 2],
    pub classification: PointClass,
}

impl CriticalPointReport {
    pub fn gradient_norm(&self) -> f64 {
        self.gradient[0].hypot(self.gradient[1])
    }
}

/// Finite-difference gradient and Hessian of `d(a, b)` around `at`.
///
/// The gradient uses central differences with step `h`. Second differences
/// divide by the step squared, so the Hessian uses `max(h, 1e-3)` to stay
/// clear of solver round-off. Classification only looks at eigenvalue signs
/// (threshold [`tolerances::EIGEN_SIGN`]); check the gradient separately.
pub fn critical_point_check(family: FamilyTag, at: (f64, f64), h: f64) -> Result<CriticalPointReport> {
    let (a, b) = at;
    let d = |x: f64, y: f64| -> Result<f64> {
        TriangleParams::new(x, y)
            .and_then(|p| dimension_of(family, p, 0.0))
            .map(|s| s.d)
            .map_err(|_| Error::DomainEdge { family, a, b })
    };
    let gradient = [
        (d(a + h, b)? - d(a - h, b)?) / (2.0 * h),
        (d(a, b + h)? - d(a, b - h)?) / (2.0 * h),
    ];

    let k = h.max(1e-3);
    let centre = d(a, b)?;
    let h_aa = (d(a + k, b)? - 2.0 * centre + d(a - k, b)?) / (k * k);
    let h_bb = (d(a, b + k)? - 2.0 * centre + d(a, b - k)?) / (k * k);
    let h_ab = (d(a + k, b + k)? - d(a + k, b - k)? - d(a - k, b + k)? + d(a - k, b - k)?) / (4.0 * k * k);

    let mean = 0.5 * (h_aa + h_bb);
    let radius = (0.5 * (h_aa - h_bb)).hypot(h_ab);
    let hessian_eigs = [mean - radius, mean + radius];

    let t = tolerances::EIGEN_SIGN;
    let classification = match hessian_eigs {
        [lo, _] if lo > t => PointClass::Min,
        [_, hi] if hi < -t => PointClass::Max,
        [lo, hi] if lo < -t && hi > t => PointClass::Saddle,
        _ => PointClass::Inconclusive,
    };
    Ok(CriticalPointReport { location: at, gradient, hessian_eigs, classification })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const LOG3_LOG2: f64 = 1.584_962_500_721_156_3;

    /// Newton iteration from d = 1, independent of the bisection path.
    fn newton_oracle(ratios: &[f64]) -> f64 {
        let r: Vec<f64> = ratios.iter().copied().filter(|&s| s > 0.0).collect();
        let mut d = 1.0;
        for _ in 0..100 {
            let g: f64 = r.iter().map(|s| s.powf(d)).sum::<f64>() - 1.0;
            let dg: f64 = r.iter().map(|s| s.powf(d) * s.ln()).sum();
            let step = g / dg;
            d -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        d
    }

    #[test]
    fn sierpinski_dimension() {
        assert_abs_diff_eq!(LOG3_LOG2, 3f64.ln() / 2f64.ln(), epsilon = 1e-15);
        let d = moran_dimension(&[0.5, 0.5, 0.5], 1e-12).unwrap();
        assert_abs_diff_eq!(d, LOG3_LOG2, epsilon = 1e-10);
    }

    #[test]
    fn right_angle_boundary_gives_two() {
        let sol = moran_solve(&[0.8, 0.6, 0.0], 1e-12).unwrap();
        assert_abs_diff_eq!(sol.d, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn two_halves_tile_a_segment() {
        assert_abs_diff_eq!(moran_dimension(&[0.5, 0.5, 0.0], 1e-12).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn invalid_ratios() {
        assert!(matches!(moran_solve(&[0.5, 0.0, 0.0], 1e-12), Err(Error::BracketFailure { .. })));
        assert!(matches!(moran_solve(&[0.5, 1.0, 0.2], 1e-12), Err(Error::InvalidRatio { index: 1, .. })));
        assert!(matches!(moran_solve(&[0.5, -0.1, 0.2], 1e-12), Err(Error::InvalidRatio { .. })));
        assert!(matches!(moran_solve(&[0.5, f64::NAN], 1e-12), Err(Error::InvalidRatio { .. })));
        // Σ s² > 1 even at d = 4
        assert!(matches!(moran_solve(&[0.99, 0.99, 0.99], 1e-12), Err(Error::BracketFailure { upper }) if upper == 4.0));
    }

    #[test]
    fn widened_bracket() {
        // Σ s² = 1.47 > 1: root lies above 2
        let r = [0.7, 0.7, 0.7];
        let d = moran_dimension(&r, 1e-12).unwrap();
        assert!(d > 2.0);
        assert_abs_diff_eq!(d, newton_oracle(&r), epsilon = 1e-11);
    }

    #[test]
    fn zero_tolerance_runs_to_full_precision() {
        let sol = moran_solve(&[0.5, 0.5, 0.5], 0.0).unwrap();
        assert_abs_diff_eq!(sol.d, LOG3_LOG2, epsilon = 4e-16);
        assert!(sol.iterations <= tolerances::MORAN_MAX_ITER);
    }

    #[test]
    fn family_examples() {
        let p = |a, b| TriangleParams::new(a, b).unwrap();
        for (a, b) in [(1.0, 1.0), (1.1, 0.9), (1.4, 2.0)] {
            assert_abs_diff_eq!(dimension_of(FamilyTag::Nnn, p(a, b), 1e-12).unwrap().d, LOG3_LOG2, epsilon = 1e-10);
        }
        let ffn = dimension_of(FamilyTag::Ffn, p(0.2, 1.1), 1e-12).unwrap();
        assert!((ffn.d - 1.44).abs() <= 0.01, "{}", ffn.d);
        assert_abs_diff_eq!(dimension_of(FamilyTag::Fnn, p(1.0, 1.0), 1e-12).unwrap().d, LOG3_LOG2, epsilon = 1e-10);
    }

    #[test]
    fn boundary_limit_evaluates_right_triangles() {
        let p = TriangleParams::new(0.6, 0.8).unwrap();
        assert!(dimension_of(FamilyTag::Ffn, p, 1e-12).is_err());
        let lim = dimension_limit(FamilyTag::Ffn, p, 1e-12).unwrap();
        assert_abs_diff_eq!(lim.d, 2.0, epsilon = 1e-9);
        // obtuse FFF is still refused
        let q = TriangleParams::new(1.4, 2.0).unwrap();
        assert!(matches!(dimension_limit(FamilyTag::Fff, q, 1e-12), Err(Error::FamilyDomainViolation { .. })));
    }

    fn fnn_d(b: f64) -> f64 {
        dimension_of(FamilyTag::Fnn, TriangleParams::new(companion_side(b), b).unwrap(), 0.0).unwrap().d
    }

    #[test]
    fn fnn_derivative_vanishes_at_one() {
        assert_abs_diff_eq!(fnn_implicit_derivative(1.0, LOG3_LOG2), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn fnn_derivative_matches_central_difference() {
        let h = 1e-5;
        for b in [0.9, 0.5, 1.3, 2.0] {
            let fd = (fnn_d(b + h) - fnn_d(b - h)) / (2.0 * h);
            let exact = fnn_implicit_derivative(b, fnn_d(b));
            assert!((exact - fd).abs() <= 1e-6_f64.max(1e-4 * exact.abs()), "b={b}: {exact} vs {fd}");
        }
    }

    #[test]
    fn fnn_derivative_changes_sign_across_one() {
        let below = fnn_implicit_derivative(0.8, fnn_d(0.8));
        let above = fnn_implicit_derivative(1.2, fnn_d(1.2));
        assert!(below < 0.0 && above > 0.0, "{below} {above}");
    }

    #[test]
    fn scan_1d_examples() {
        let recs = scan_1d(FamilyTag::Fnn, 0.9, 1.1, 3, Some(1.0), 1e-12);
        assert_eq!(recs.len(), 3);
        let (idx, min) = scan_minimum(&recs).unwrap();
        assert_eq!(idx, 1);
        assert_abs_diff_eq!(min.b, 1.0, epsilon = 1e-15);

        let one = scan_1d(FamilyTag::Ffn, 1.3, 2.0, 1, Some(1.1), 1e-12);
        let direct = dimension_of(FamilyTag::Ffn, TriangleParams::new(1.1, 1.3).unwrap(), 1e-12).unwrap();
        assert_eq!(one, vec![ScanRecord::Sample(direct)]);

        // b = 0.05 with a = 1 is degenerate
        let gaps = scan_1d(FamilyTag::Nnn, 0.0, 0.5, 3, Some(1.0), 1e-12);
        assert!(matches!(&gaps[0], ScanRecord::Gap { reason, .. } if reason.contains("positive")));
        assert!(gaps[2].sample().is_some());
    }

    #[test]
    fn scan_2d_ffn_is_symmetric() {
        let recs = scan_2d(FamilyTag::Ffn, (0.3, 2.0), (0.3, 2.0), (9, 9), 1e-12);
        assert_eq!(recs.len(), 81);
        for i in 0..9 {
            for j in 0..9 {
                match (&recs[i * 9 + j], &recs[j * 9 + i]) {
                    (ScanRecord::Sample(x), ScanRecord::Sample(y)) => assert!((x.d - y.d).abs() <= 1e-9),
                    (ScanRecord::Gap { .. }, ScanRecord::Gap { .. }) => {}
                    (x, y) => panic!("asymmetric domain: {x:?} vs {y:?}"),
                }
            }
        }
    }

    #[test]
    fn ffn_tends_to_two_at_the_right_angle_curve() {
        // approach (0.6, 0.8) along the outward normal of a²+b²=1
        let mut last = 0.0;
        for eps in [1e-2, 1e-3, 1e-4, 1e-6] {
            let p = TriangleParams::new(0.6 * (1.0 + eps), 0.8 * (1.0 + eps)).unwrap();
            let d = dimension_of(FamilyTag::Ffn, p, 1e-12).unwrap().d;
            assert!(d > last && d < 2.0);
            last = d;
        }
        assert!(2.0 - last < 1e-3, "{last}");
    }

    #[test]
    fn obtuse_ffn_goes_below_sierpinski() {
        let recs = scan_2d(FamilyTag::Ffn, (0.1, 0.5), (1.0, 1.3), (5, 4), 1e-12);
        assert!(recs.iter().filter_map(ScanRecord::sample).any(|s| s.d < LOG3_LOG2));
    }

    #[test]
    fn ffn_saddle_at_equilateral() {
        let r = critical_point_check(FamilyTag::Ffn, (1.0, 1.0), tolerances::FD_STEP).unwrap();
        assert!(r.gradient_norm() < 1e-6, "{r:?}");
        assert_eq!(r.classification, PointClass::Saddle, "{r:?}");
    }

    #[test]
    fn fff_and_fnn_critical_at_equilateral() {
        let r = critical_point_check(FamilyTag::Fff, (1.0, 1.0), tolerances::FD_STEP).unwrap();
        assert!(r.gradient_norm() < 1e-6, "{r:?}");
        let r = critical_point_check(FamilyTag::Fnn, (1.0, 1.0), tolerances::FD_STEP).unwrap();
        assert!(r.gradient[1].abs() < 1e-6, "{r:?}");
        assert_eq!(r.gradient[0], 0.0);
    }

    #[test]
    fn stencil_outside_domain() {
        // a² + b² − 1 ≈ 1e-4: the Hessian stencil crosses the FFN boundary
        let b = (1.0f64 - 0.36 + 1e-4).sqrt();
        assert!(matches!(critical_point_check(FamilyTag::Ffn, (0.6, b), 1e-5), Err(Error::DomainEdge { .. })));
    }

    #[test]
    fn csv_layout() {
        let recs = vec![
            ScanRecord::Sample(DimensionSample { a: 1.0, b: 0.5, d: 1.5, residual: 0.0 }),
            ScanRecord::Gap { a: 0.1, b: 0.2, reason: "bad, really".into() },
        ];
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "a,b,dimension,residual,reason");
        assert_eq!(lines[1], "1.0000000000000000,0.50000000000000000,1.5000000000000000,0.0000000000000000,");
        assert_eq!(lines[2], "0.10000000000000001,0.20000000000000001,nan,nan,\"bad, really\"");
    }

    fn ratio() -> impl Strategy<Value = f64> {
        0.01f64..0.95
    }

    proptest! {
        #[test]
        fn residual_within_tolerance(r in proptest::array::uniform3(ratio())) {
            prop_assume!(r.iter().map(|s| s * s).sum::<f64>() <= 1.0);
            let sol = moran_solve(&r, 1e-12).unwrap();
            prop_assert!(sol.residual <= 1e-12);
            prop_assert!(sol.iterations <= tolerances::MORAN_MAX_ITER);
            prop_assert!((sol.d - newton_oracle(&r)).abs() <= 1e-10);
        }

        #[test]
        fn permutation_invariant(r in proptest::array::uniform3(ratio())) {
            prop_assume!(r.iter().map(|s| s.powi(4)).sum::<f64>() <= 1.0);
            let d0 = moran_dimension(&r, 0.0).unwrap();
            for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]] {
                let p = [r[perm[0]], r[perm[1]], r[perm[2]]];
                prop_assert!((moran_dimension(&p, 0.0).unwrap() - d0).abs() <= 1e-14);
            }
        }

        #[test]
        fn fnn_derivative_sign(b in 0.2f64..3.0) {
            prop_assume!((b - 1.0).abs() > 1e-3);
            let slope = fnn_implicit_derivative(b, fnn_d(b));
            prop_assert!(if b < 1.0 { slope < 0.0 } else { slope > 0.0 }, "b={} slope={}", b, slope);
        }

        #[test]
        fn monotone_in_each_ratio(r in proptest::array::uniform3(0.01f64..0.8), i in 0usize..3, bump in 1e-3f64..0.1) {
            prop_assume!(r.iter().map(|s| s.powi(4)).sum::<f64>() <= 0.9);
            let mut bigger = r;
            bigger[i] = (bigger[i] + bump).min(0.9);
            prop_assume!(bigger[i] > r[i]);
            prop_assume!(bigger.iter().map(|s| s.powi(4)).sum::<f64>() <= 1.0);
            prop_assert!(moran_dimension(&bigger, 0.0).unwrap() > moran_dimension(&r, 0.0).unwrap());
        }
    }
}
