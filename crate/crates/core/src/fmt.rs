//! Deterministic number formatting for reports and CLI output.

/// Formats a real with 15 significant digits as a plain decimal string.
///
/// No locale, no scientific notation for the magnitudes this crate produces;
/// the same value always renders to the same bytes.
pub fn real(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    // Exponent via the formatter rather than log10 to avoid edge-of-decade
    // rounding surprises.
    let sci = format!("{:e}", v.abs());
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    let decimals = (14 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, v);
    trim_trailing_zeros(&s)
}

fn trim_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(real(7.300563079745769), "7.30056307974577");
        assert_eq!(real(12.957417329238151), "12.9574173292382");
        assert_eq!(real(2.0_f64.sqrt()), "1.4142135623731");
        assert_eq!(real(0.0), "0");
        assert_eq!(real(-2.5), "-2.5");
        assert_eq!(real(794.0), "794");
        assert_eq!(real(1e-3), "0.001");
    }
}
