//! Plain-text key-value form of an IFS.
//!
//! ```text
//! family = FNN
//! a = 1.1000000000000001
//! b = 0.90000000000000002
//! f_A = m11 m12 m21 m22 tx ty
//! f_B = ...
//! f_C = ...
//! ```
//!
//! Numbers carry 17 significant digits so that parsing recovers every
//! coefficient bit-exactly. Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{build_ifs, AffineMap2, FamilyTag, SierpinskiIFS};
use crate::error::{Error, Result};
use crate::format::sig17;
use crate::geometry::TriangleParams;

/// Parsed contents of the text form.
#[derive(Debug, Clone, PartialEq)]
pub struct IfsRecord {
    pub family: FamilyTag,
    pub a: f64,
    pub b: f64,
    pub maps: [AffineMap2; 3],
}

const KEYS: [&str; 3] = ["f_A", "f_B", "f_C"];

impl SierpinskiIFS {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family = {}", self.family);
        let _ = writeln!(out, "a = {}", sig17(self.params.a()));
        let _ = writeln!(out, "b = {}", sig17(self.params.b()));
        for (key, map) in KEYS.iter().zip(self.maps.iter()) {
            let coeffs: Vec<String> = map.to_array().iter().map(|&c| sig17(c)).collect();
            let _ = writeln!(out, "{key} = {}", coeffs.join(" "));
        }
        out
    }

    pub fn to_record(&self) -> IfsRecord {
        IfsRecord { family: self.family, a: self.params.a(), b: self.params.b(), maps: self.maps }
    }
}

impl IfsRecord {
    pub fn parse(text: &str) -> Result<Self> {
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected 'key = value'", lineno + 1)))?;
            if fields.insert(key.trim(), value.trim()).is_some() {
                return Err(Error::Parse(format!("line {}: duplicate key '{}'", lineno + 1, key.trim())));
            }
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| Error::Parse(format!("missing key '{k}'")));
        let num = |k: &str, s: &str| s.parse::<f64>().map_err(|e| Error::Parse(format!("{k}: {e}")));

        let family: FamilyTag = get("family")?.parse()?;
        let a = num("a", get("a")?)?;
        let b = num("b", get("b")?)?;
        let mut maps = [AffineMap2::IDENTITY; 3];
        for (i, key) in KEYS.iter().enumerate() {
            let parts: Vec<&str> = get(key)?.split_whitespace().collect();
            if parts.len() != 6 {
                return Err(Error::Parse(format!("{key}: expected 6 coefficients, found {}", parts.len())));
            }
            let mut c = [0.0; 6];
            for (slot, p) in c.iter_mut().zip(&parts) {
                *slot = num(key, p)?;
            }
            maps[i] = AffineMap2::from_array(c);
        }
        Ok(IfsRecord { family, a, b, maps })
    }

    /// Rebuilds the system from `(family, a, b)` and checks that the stored
    /// coefficients agree with a fresh construction within `tol`.
    pub fn rebuild(&self, tol: f64) -> Result<SierpinskiIFS> {
        let ifs = build_ifs(self.family, TriangleParams::new(self.a, self.b)?)?;
        for (i, (stored, fresh)) in self.maps.iter().zip(ifs.maps()).enumerate() {
            let residual = stored.max_abs_diff(fresh);
            if residual.is_nan() || residual > tol {
                return Err(Error::ConsistencyFailure {
                    identity: format!("stored {} matches construction", KEYS[i]),
                    residual,
                });
            }
        }
        Ok(ifs)
    }
}
