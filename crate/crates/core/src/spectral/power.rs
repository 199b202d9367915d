use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::scalar::Real;

use super::jacobi::{eigenvalues, pair_residual};
use super::{SpectralError, SymMatrix};

const MAX_ITERATIONS: usize = 200_000;
const RESTART_SEED: u64 = 0x5eed_0f1a_77ce;

/// Largest eigenvalue of an entrywise nonnegative symmetric matrix.
///
/// Power iteration on `M + cI` (with `c` half the largest row sum, so the
/// negative end of the spectrum cannot dominate), started from the all-ones
/// vector and stopped once the Rayleigh-quotient residual drops to `tol`.
/// The result must agree with the Jacobi spectrum to within `10 * tol`.
pub fn spectral_radius<T: Real>(m: &SymMatrix<T>, tol: T) -> Result<T, SpectralError> {
    if !(tol > T::zero()) {
        return Err(SpectralError::InvalidTolerance(
            tol.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let n = m.dim();
    if n == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    if let Some((row, col)) = m.negative_entry() {
        return Err(SpectralError::NegativeEntry { row, col });
    }
    let power = power_iteration(m, tol)?;
    let jacobi = eigenvalues(m, tol)?.radius();
    if (power - jacobi).abs() > T::lit(10.0) * tol {
        return Err(SpectralError::CrossCheck {
            power: power.to_f64().unwrap_or(f64::NAN),
            jacobi: jacobi.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(power)
}

fn power_iteration<T: Real>(m: &SymMatrix<T>, tol: T) -> Result<T, SpectralError> {
    let n = m.dim();
    let max_row = (0..n).map(|i| m.row_sum(i)).fold(T::zero(), T::max);
    if max_row == T::zero() {
        return Ok(T::zero());
    }
    let shift = max_row / T::lit(2.0);

    let mut x = normalized(vec![T::one(); n]);
    let mut restarted = false;
    let mut previous = T::nan();
    let mut residual = T::infinity();
    for _ in 0..MAX_ITERATIONS {
        let mx = m.mul_vec(&x);
        let rayleigh = dot(&x, &mx);
        residual = pair_residual(m, rayleigh, &x);
        if residual <= tol {
            return Ok(rayleigh);
        }
        if rayleigh == previous && !restarted {
            // Stationary Rayleigh quotient with a large residual: the start
            // vector is stuck, so retry from a fixed pseudorandom positive vector.
            let mut rng = SplitMix64::seed_from_u64(RESTART_SEED);
            x = normalized(
                (0..n)
                    .map(|_| T::lit((rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 + 0.5))
                    .collect(),
            );
            restarted = true;
            previous = T::nan();
            continue;
        }
        previous = rayleigh;
        x = normalized(mx.iter().zip(&x).map(|(&y, &xi)| y + shift * xi).collect());
    }
    Err(SpectralError::PowerNoConvergence {
        residual: residual.to_f64().unwrap_or(f64::NAN),
        iterations: MAX_ITERATIONS,
    })
}

fn dot<T: Real>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).fold(T::zero(), |acc, (&a, &b)| acc + a * b)
}

fn normalized<T: Real>(mut x: Vec<T>) -> Vec<T> {
    let norm = dot(&x, &x).sqrt();
    for xi in &mut x {
        *xi = *xi / norm;
    }
    x
}
