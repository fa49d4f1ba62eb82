//! Float formatting shared by the CSV writers.

/// Significant digits in CSV output.
pub const SIG_DIGITS: usize = 9;

/// Formats like C's `%.9g`: nine significant digits, trailing zeros removed,
/// scientific notation only for very small or very large magnitudes.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let prec = SIG_DIGITS - 1;
    let sci = format!("{v:.prec$e}");
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("`e` format always has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");

    if (-4..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (prec as i32 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{sign}{:02}",
            trim_zeros(mantissa.to_string()),
            exp.abs()
        )
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        let keep = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(keep);
    }
    s
}
