//! Number rendering.
//!
//! Two flavours: [`shortest`] is the lossless form used in text files, and
//! [`display_column`] formats a group of values to a shared layout for the
//! human-readable displays (seven significant digits, fixed or scientific,
//! whichever is narrower).

const DISPLAY_DIGITS: usize = 7;

/// Shortest string that parses back to exactly `value`. Integral values carry
/// no decimal point; very large or very small magnitudes use an exponent.
pub fn shortest(value: f64) -> String {
    let abs = value.abs();
    if abs != 0.0 && !(1e-5..1e16).contains(&abs) {
        format!("{value:e}")
    } else {
        format!("{value}")
    }
}

struct Digits {
    negative: bool,
    /// significant digits needed at DISPLAY_DIGITS precision, at least 1
    sig: usize,
    /// decimal exponent of the leading digit after rounding
    exp: i32,
}

fn digits(value: f64) -> Digits {
    if value == 0.0 {
        return Digits {
            negative: false,
            sig: 1,
            exp: 0,
        };
    }
    let s = format!("{:.*e}", DISPLAY_DIGITS - 1, value.abs());
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let significant = mantissa.replace('.', "");
    let sig = significant.trim_end_matches('0').len().max(1);
    Digits {
        negative: value < 0.0,
        sig,
        exp,
    }
}

fn sci(value: f64, mantissa_decimals: usize) -> String {
    let s = format!("{value:.mantissa_decimals$e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.unsigned_abs())
}

/// Formats `values` with one shared layout so that a column of them lines
/// up. Each string is unpadded; callers align to a common width.
pub fn display_column(values: &[f64]) -> Vec<String> {
    if values.is_empty() {
        return Vec::new();
    }
    let info: Vec<Digits> = values.iter().map(|&v| digits(v)).collect();
    let any_negative = info.iter().any(|d| d.negative);
    let neg = usize::from(any_negative);

    let max_sig = info.iter().map(|d| d.sig).max().unwrap_or(1);
    let wide_exp = info.iter().any(|d| d.exp.unsigned_abs() >= 100);
    let mantissa_decimals = max_sig - 1;
    let sci_width = neg
        + 1
        + if mantissa_decimals > 0 {
            mantissa_decimals + 1
        } else {
            0
        }
        + if wide_exp { 5 } else { 4 };

    let right = info
        .iter()
        .map(|d| (d.sig as i32 - d.exp - 1).max(0) as usize)
        .max()
        .unwrap_or(0);
    let left = info
        .iter()
        .map(|d| (d.exp + 1).max(1) as usize)
        .max()
        .unwrap_or(1);
    let fixed_width = neg + left + if right > 0 { right + 1 } else { 0 };

    if fixed_width <= sci_width {
        values.iter().map(|v| format!("{v:.right$}")).collect()
    } else {
        values.iter().map(|&v| sci(v, mantissa_decimals)).collect()
    }
}

/// Right-aligns every string to the widest one.
pub(crate) fn pad_common(cells: &mut [String]) {
    let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
    for c in cells.iter_mut() {
        let pad = width - c.chars().count();
        if pad > 0 {
            c.insert_str(0, &" ".repeat(pad));
        }
    }
}
