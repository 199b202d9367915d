//! Number formatting and parameter parsing.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::CliError;

/// Like C's `%.12g`: 12 significant digits, trailing zeros removed.
pub fn fmt_float(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..DIGITS).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Value rounded to what [`fmt_float`] prints.
pub fn round12(x: f64) -> f64 {
    fmt_float(x).parse().unwrap_or(x)
}

/// Exact decimal or fraction: `"2"`, `"0.5"`, `"-1.25"`, `"3/4"`.
pub fn parse_rational(s: &str) -> Result<Rational64, CliError> {
    let bad = || CliError::Input(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = 10i64.checked_pow(frac_part.len() as u32).ok_or_else(bad)?;
    let r = Rational64::new(numer, denom);
    Ok(if negative { -r } else { r })
}

/// Decimal rendering of an exact rational, for reports.
pub fn fmt_rational(r: Rational64) -> String {
    if r.denom().is_one() || r.is_zero() {
        r.numer().to_string()
    } else {
        fmt_float(*r.numer() as f64 / *r.denom() as f64)
    }
}

pub fn parse_f64(s: &str) -> Result<f64, CliError> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("not a number: {s:?}")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Input(format!("not a finite number: {s:?}")))
    }
}

/// `key=value` pairs separated by `sep`; keys must come from `allowed`.
pub fn parse_pairs<'a>(
    spec: &'a str,
    sep: char,
    allowed: &[&str],
) -> Result<Vec<(&'a str, &'a str)>, CliError> {
    let mut out = Vec::new();
    for part in spec.split(sep).map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("expected key=value, got {part:?}")))?;
        let key = key.trim();
        if !allowed.contains(&key) {
            return Err(CliError::Input(format!(
                "unknown parameter {key:?}; expected one of {}",
                allowed.join(", ")
            )));
        }
        if out.iter().any(|(k, _)| *k == key) {
            return Err(CliError::Input(format!("parameter {key:?} given twice")));
        }
        out.push((key, value.trim()));
    }
    Ok(out)
}
