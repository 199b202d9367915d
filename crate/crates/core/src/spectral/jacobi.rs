//! Cyclic Jacobi eigen-solver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` and applies the plane
//! rotation that zeroes `a[p][q]`. During the first sweeps, entries below a
//! threshold proportional to the current off-diagonal norm are skipped, which
//! saves work while the matrix is still far from diagonal. Rotations are
//! accumulated so the residual `max ||M v - lambda v||` can be reported.

use crate::scalar::Real;

use super::{SpectralError, SymMatrix};

pub const MAX_SWEEPS: usize = 100;
pub const DEFAULT_TOL: f64 = 1e-10;

/// Eigenvalues in non-increasing order, plus the worst eigenpair residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    pub values: Vec<T>,
    pub residual: T,
}

impl<T: Real> Spectrum<T> {
    pub fn radius(&self) -> T {
        self.values[0]
    }

    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &x| acc + x)
    }
}

/// Eigenvalues with eigenvectors (columns of `vectors`, same order as `values`).
#[derive(Clone, Debug)]
pub struct EigenDecomposition<T> {
    pub spectrum: Spectrum<T>,
    pub vectors: Vec<Vec<T>>,
}

pub fn eigenvalues<T: Real>(m: &SymMatrix<T>, tol: T) -> Result<Spectrum<T>, SpectralError> {
    eigen_decomposition(m, tol).map(|e| e.spectrum)
}

pub fn eigen_decomposition<T: Real>(
    m: &SymMatrix<T>,
    tol: T,
) -> Result<EigenDecomposition<T>, SpectralError> {
    if !(tol > T::zero()) {
        return Err(SpectralError::InvalidTolerance(
            tol.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let n = m.dim();
    if n == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut v: Vec<Vec<T>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect();

    let frob = a
        .iter()
        .flatten()
        .fold(T::zero(), |acc, &x| acc + x * x)
        .sqrt();
    // Below this the off-diagonal part is at rounding level and cannot shrink further.
    let floor = T::lit(4.0) * T::from_count(n) * T::epsilon() * frob;
    let stop = (tol * T::lit(1e-3)).max(floor);
    let hundred = T::lit(100.0);

    let mut converged = false;
    let mut off = off_norm(&a);
    for sweep in 0..MAX_SWEEPS {
        if off <= stop {
            converged = true;
            break;
        }
        let threshold = if sweep < 3 {
            T::lit(0.2) * off / T::from_count(n * n)
        } else {
            T::zero()
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                let app = a[p][p];
                let aqq = a[q][q];
                if sweep > 3
                    && (app.abs() + hundred * apq.abs() == app.abs())
                    && (aqq.abs() + hundred * apq.abs() == aqq.abs())
                {
                    a[p][q] = T::zero();
                    a[q][p] = T::zero();
                    continue;
                }
                if apq.abs() <= threshold || apq == T::zero() {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
        off = off_norm(&a);
    }
    if !converged && off > stop {
        return Err(SpectralError::NoConvergence {
            off_norm: off.to_f64().unwrap_or(f64::NAN),
            sweeps: MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).expect("finite eigenvalues"));
    let values: Vec<T> = order.iter().map(|&i| a[i][i]).collect();
    let vectors: Vec<Vec<T>> = order
        .iter()
        .map(|&i| (0..n).map(|r| v[r][i]).collect())
        .collect();
    let residual = values
        .iter()
        .zip(&vectors)
        .map(|(&lambda, x)| pair_residual(m, lambda, x))
        .fold(T::zero(), T::max);
    Ok(EigenDecomposition {
        spectrum: Spectrum { values, residual },
        vectors,
    })
}

fn off_norm<T: Real>(a: &[Vec<T>]) -> T {
    let mut s = T::zero();
    for (p, row) in a.iter().enumerate() {
        for &x in &row[p + 1..] {
            s = s + x * x;
        }
    }
    (s + s).sqrt()
}

#[allow(clippy::needless_range_loop)]
fn rotate<T: Real>(a: &mut [Vec<T>], v: &mut [Vec<T>], p: usize, q: usize) {
    let n = a.len();
    let apq = a[p][q];
    let theta = (a[q][q] - a[p][p]) / (T::lit(2.0) * apq);
    let t = {
        let mag = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
        if theta < T::zero() {
            -mag
        } else {
            mag
        }
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k][p];
        let akq = a[k][q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[k][p] = new_p;
        a[p][k] = new_p;
        a[k][q] = new_q;
        a[q][k] = new_q;
    }
    a[p][p] = a[p][p] - t * apq;
    a[q][q] = a[q][q] + t * apq;
    a[p][q] = T::zero();
    a[q][p] = T::zero();
    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

pub(crate) fn pair_residual<T: Real>(m: &SymMatrix<T>, lambda: T, x: &[T]) -> T {
    m.mul_vec(x)
        .iter()
        .zip(x)
        .fold(T::zero(), |acc, (&mx, &xi)| {
            let d = mx - lambda * xi;
            acc + d * d
        })
        .sqrt()
}
