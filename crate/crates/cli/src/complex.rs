//! Complex literals of the form `a+bi`, `a-bi`, `a`, `bi`, `i` as one token.

use num_complex::Complex64;

fn number(s: &str) -> Option<f64> {
    let first = s.chars().next()?;
    if !(first.is_ascii_digit() || matches!(first, '+' | '-' | '.')) {
        return None;
    }
    let v: f64 = s.parse().ok()?;
    v.is_finite().then_some(v)
}

fn imag_coeff(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => number(s),
    }
}

/// Parses a complex literal. Whitespace, `inf` and `nan` are rejected.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("malformed complex literal '{s}' (expected a+bi, a-bi, a or bi)");
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return number(s).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (number(&body[..k]).ok_or_else(bad)?, imag_coeff(&body[k..]).ok_or_else(bad)?),
        None => (0.0, imag_coeff(body).ok_or_else(bad)?),
    };
    Ok(Complex64::new(re, im))
}
