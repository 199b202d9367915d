use crate::scalar::Real;

use super::BoundsError;

/// The spectral threshold below which `mu_f > (n - k) / 2` is guaranteed:
///
/// ```text
///              | delta * sqrt(1 + 2k / (n - k))   a = 0
/// phi(a,n,d,k) = | 2 a delta n / (n - k)            0 < a <= 1
///              | a delta (n + k) / (n - k)        a > 1
/// ```
///
/// Domain: `a >= 0`, `0 < k < n`, `1 <= delta <= (n - k) / 2`.
/// The branches do not join continuously at `a = 0`.
pub fn phi<T: Real>(a: T, n: usize, delta: usize, k: T) -> Result<T, BoundsError> {
    let nn = T::from_count(n);
    let d = T::from_count(delta);
    if !(a >= T::zero()) || !a.is_finite() {
        return Err(BoundsError::Domain(format!(
            "a = {a:?} must be a finite value >= 0"
        )));
    }
    if !(k > T::zero() && k < nn) {
        return Err(BoundsError::Domain(format!(
            "k = {k:?} must lie in (0, n = {n})"
        )));
    }
    if delta < 1 {
        return Err(BoundsError::Domain("delta must be at least 1".into()));
    }
    if T::from_count(2 * delta) > nn - k {
        return Err(BoundsError::Domain(format!(
            "delta = {delta} exceeds (n - k) / 2 with n = {n}, k = {k:?}"
        )));
    }
    let two = T::lit(2.0);
    let value = if a == T::zero() {
        d * (T::one() + two * k / (nn - k)).sqrt()
    } else if a <= T::one() {
        two * a * d * nn / (nn - k)
    } else {
        a * d * (nn + k) / (nn - k)
    };
    Ok(value)
}
