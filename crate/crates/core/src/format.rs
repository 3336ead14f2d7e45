//! Decimal formatting with 17 significant digits, enough to round-trip any
//! `f64` exactly.

/// Formats `x` with 17 significant digits. Positional notation is used for
/// magnitudes in `[1e-4, 1e16)`, scientific otherwise.
pub fn sig17(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0000000000000000".into() } else { "0.0000000000000000".into() };
    }
    let mag = x.abs();
    if !(1e-4..1e16).contains(&mag) {
        return format!("{:.16e}", x);
    }
    // Exponent of the leading digit, taken from the rounded scientific form
    // so that values like 9.99999999999999999 do not gain an 18th digit.
    let sci = format!("{:.16e}", x);
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (16 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(sig17(0.5), "0.50000000000000000");
        assert_eq!(sig17(1.0), "1.0000000000000000");
        assert_eq!(sig17(0.0), "0.0000000000000000");
        assert_eq!(sig17(f64::NAN), "nan");
        assert_eq!(sig17(1e-20), "9.9999999999999995e-21");
        assert_eq!(sig17(2e20), "2.0000000000000000e20");
        assert_eq!(sig17(123.25), "123.25000000000000");
    }

    #[test]
    fn round_trips() {
        for &x in &[0.1, 1.1, 0.9, 3f64.sqrt() / 2.0, 1e-5, 12345.678, -0.3, 9.999999999999998, 2.220446049250313e-16] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }
}
