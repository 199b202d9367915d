//! Closed-form largest eigenvalues of two-class quotients of `aD + A`.

use crate::scalar::Real;

use super::SpectralError;

/// Largest eigenvalue of the quotient `[[ar/s, r/s], [r/t, ar/t]]` of a
/// bipartite graph with `r` edges between classes of sizes `s` and `t`.
pub fn quotient_radius_bipartite<T: Real>(a: T, r: T, s: T, t: T) -> Result<T, SpectralError> {
    if !(s > T::zero() && t > T::zero()) {
        return Err(SpectralError::ClosedFormDomain(format!(
            "class sizes must be positive, got s = {s:?}, t = {t:?}"
        )));
    }
    if r < T::zero() || a < T::zero() {
        return Err(SpectralError::ClosedFormDomain(format!(
            "need r >= 0 and a >= 0, got r = {r:?}, a = {a:?}"
        )));
    }
    let (p, q) = (r / s, r / t);
    let two = T::lit(2.0);
    let radicand = (a * a - T::one()) * (p - q).powi(2) + (p + q).powi(2);
    Ok((a * (p + q) + radicand.sqrt()) / two)
}

/// The same quotient for a member of the biregular family with `|X| = x`,
/// `|Y| = y` and every `Y` vertex of degree `delta`.
pub fn family_quotient_radius<T: Real>(
    a: T,
    delta: usize,
    x: usize,
    y: usize,
) -> Result<T, SpectralError> {
    if x == 0 || y == 0 || delta == 0 {
        return Err(SpectralError::ClosedFormDomain(format!(
            "need x, y, delta >= 1, got x = {x}, y = {y}, delta = {delta}"
        )));
    }
    if a < T::zero() {
        return Err(SpectralError::ClosedFormDomain(format!(
            "a = {a:?} must be >= 0"
        )));
    }
    let d = T::from_count(delta);
    let ratio = T::from_count(y) / T::from_count(x);
    let radicand = (a * a - T::one()) * d * d * (ratio - T::one()).powi(2)
        + d * d * (ratio + T::one()).powi(2);
    Ok((a * d * (ratio + T::one()) + radicand.sqrt()) / T::lit(2.0))
}
