use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::TriangleParams;
use crate::ifs::{scaling_ratios, FamilyTag};
use crate::tolerances;

/// Common base `s` with `ratioᵢ = s^{exponentsᵢ}`, and the resulting tile
/// scales `s, s², …, s^{max exponent}` in descending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrototileSet {
    pub s: f64,
    pub exponents: [u32; 3],
    pub classes: Vec<f64>,
}

impl PrototileSet {
    pub fn max_exponent(&self) -> u32 {
        self.exponents.iter().copied().max().unwrap_or(1)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Looks for integer exponents `1 ≤ aᵢ ≤ 12` with gcd 1 such that every
/// ratio is a power of `s = α^{1/a₁}` within `tol`. Returns the solution
/// with the smallest exponent sum, or `None`.
pub fn algebraic_condition(ratios: [f64; 3], tol: f64) -> Option<PrototileSet> {
    if ratios.iter().any(|r| !(r.is_finite() && *r > 0.0 && *r < 1.0)) {
        return None;
    }
    let max = tolerances::ALGEBRAIC_MAX_EXPONENT;
    let mut best: Option<([u32; 3], f64)> = None;
    for a1 in 1..=max {
        let s = ratios[0].powf(1.0 / a1 as f64);
        for a2 in 1..=max {
            if (ratios[1] - s.powi(a2 as i32)).abs() > tol {
                continue;
            }
            for a3 in 1..=max {
                if gcd(gcd(a1, a2), a3) != 1 || (ratios[2] - s.powi(a3 as i32)).abs() > tol {
                    continue;
                }
                let sum = a1 + a2 + a3;
                if best.is_none_or(|(e, _)| sum < e.iter().sum()) {
                    best = Some(([a1, a2, a3], s));
                }
            }
        }
    }
    best.map(|(exponents, s)| {
        let a_max = exponents.iter().copied().max().unwrap_or(1);
        PrototileSet { s, exponents, classes: (1..=a_max).map(|j| s.powi(j as i32)).collect() }
    })
}

/// FFF parameters for which `γ = α^x = β^y`. Only `x = y = 2` is solved,
/// giving the isosceles triangle `a = b = √3/2`.
pub fn solve_fff_algebraic(x: u32, y: u32) -> Result<TriangleParams> {
    if (x, y) != (2, 2) {
        return Err(Error::Unsupported(format!("FFF algebraic parameters for x={x}, y={y}")));
    }
    let side = 3f64.sqrt() / 2.0;
    let params = TriangleParams::new(side, side)?;
    let ratios = scaling_ratios(FamilyTag::Fff, params)?;
    match algebraic_condition(ratios, tolerances::ALGEBRAIC) {
        Some(set) if set.exponents == [1, 1, 2] => Ok(params),
        other => Err(Error::ConsistencyFailure {
            identity: format!("FFF ratios {ratios:?} as powers (1,1,2), found {other:?}"),
            residual: f64::NAN,
        }),
    }
}
