//! Locale-independent number formatting with 12 significant digits.

const DIGITS: i32 = 12;

/// Like C's `%#.12g`: trailing zeros are kept, so every value prints with
/// exactly 12 significant digits. Zero prints as `0`.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    // rounding may carry into a new leading digit, so read the exponent
    // off the rounded scientific form
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-4..DIGITS).contains(&exp) {
        format!("{:.*}", (DIGITS - 1 - exp) as usize, x)
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

pub fn list(xs: impl IntoIterator<Item = f64>) -> String {
    xs.into_iter().map(num).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_range() {
        assert_eq!(num(std::f64::consts::LN_2), "0.693147180560");
        assert_eq!(num(2.0), "2.00000000000");
        assert_eq!(num(-1.5), "-1.50000000000");
        assert_eq!(num(1e-4), "0.000100000000000");
        assert_eq!(num(123456789012.0), "123456789012");
    }

    #[test]
    fn carries_into_next_decade() {
        assert_eq!(num(9.9999999999999), "10.0000000000");
        assert_eq!(num(999999999999.9), "1.00000000000e+12");
    }

    #[test]
    fn scientific_range() {
        assert_eq!(num(1.25e-5), "1.25000000000e-05");
        assert_eq!(num(-3e20), "-3.00000000000e+20");
        assert_eq!(num(1e-300), "1.00000000000e-300");
    }

    #[test]
    fn special_values() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(f64::NAN), "nan");
        assert_eq!(num(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn round_trips_to_print_precision() {
        for x in [0.1, 1.0 / 3.0, 2.0f64.sqrt() * 1e7, 6.02e23, 1.6e-19] {
            let back: f64 = num(x).parse().unwrap();
            assert!(((back - x) / x).abs() <= 5e-12);
        }
    }
}
