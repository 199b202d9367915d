use crate::scalar::{Real, Scalar};

use super::jacobi::{eigenvalues, Spectrum};
use super::{SpectralError, SymMatrix};

/// Matrix of average block row sums over a vertex partition.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix<T> {
    pub blocks: Vec<Vec<usize>>,
    /// `entries[i][j]` = (sum of block `(i, j)`) / `|blocks[i]|`.
    pub entries: Vec<Vec<T>>,
    /// Every block has constant row sums.
    pub equitable: bool,
}

pub fn quotient_matrix<T: Scalar>(
    m: &SymMatrix<T>,
    partition: &[Vec<usize>],
) -> Result<QuotientMatrix<T>, SpectralError> {
    let n = m.dim();
    let mut class_of = vec![usize::MAX; n];
    for (c, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(SpectralError::InvalidPartition(format!(
                "class {c} is empty"
            )));
        }
        for &v in block {
            if v >= n {
                return Err(SpectralError::InvalidPartition(format!(
                    "vertex {v} out of range for dimension {n}"
                )));
            }
            if class_of[v] != usize::MAX {
                return Err(SpectralError::InvalidPartition(format!(
                    "vertex {v} appears in classes {} and {c}",
                    class_of[v]
                )));
            }
            class_of[v] = c;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(SpectralError::InvalidPartition(format!(
            "vertex {v} is not covered"
        )));
    }

    let classes = partition.len();
    let mut entries = vec![vec![T::zero(); classes]; classes];
    let mut equitable = true;
    for (i, block) in partition.iter().enumerate() {
        for (j, entry) in entries[i].iter_mut().enumerate() {
            let mut first: Option<T> = None;
            let mut total = T::zero();
            for &r in block {
                let s = partition[j]
                    .iter()
                    .fold(T::zero(), |acc, &c| acc + m.get(r, c));
                match first {
                    None => first = Some(s),
                    Some(f) if !f.same(s) => equitable = false,
                    Some(_) => {}
                }
                total = total + s;
            }
            *entry = total / T::from_count(block.len());
        }
    }
    Ok(QuotientMatrix {
        blocks: partition.to_vec(),
        entries,
        equitable,
    })
}

impl<T: Real> QuotientMatrix<T> {
    /// Eigenvalues of the (generally non-symmetric) quotient.
    ///
    /// `R = S^-1 B` with `B` the symmetric matrix of block totals and
    /// `S = diag(|X_i|)`, so `R` is similar to `S^-1/2 B S^-1/2`.
    pub fn eigenvalues(&self, tol: T) -> Result<Spectrum<T>, SpectralError> {
        let sizes: Vec<T> = self.blocks.iter().map(|b| T::from_count(b.len())).collect();
        let sym = SymMatrix::from_upper(self.blocks.len(), |i, j| {
            self.entries[i][j] * sizes[i] / (sizes[i] * sizes[j]).sqrt()
        })?;
        eigenvalues(&sym, tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interlacing {
    pub holds: bool,
    pub tight: bool,
}

/// Whether `eta` (length `m`) interlaces `theta` (length `n > m`), both non-increasing.
///
/// Tight means some split `k` has `theta_i = eta_i` for `i <= k` and
/// `theta_{n-m+i} = eta_i` for `i > k`.
pub fn interlaces<T: Real>(theta: &[T], eta: &[T], tol: T) -> Result<Interlacing, SpectralError> {
    let (n, m) = (theta.len(), eta.len());
    if n <= m {
        return Err(SpectralError::LengthMismatch {
            longer: n,
            shorter: m,
        });
    }
    for (name, seq) in [("theta", theta), ("eta", eta)] {
        if let Some(i) = seq.windows(2).position(|w| w[0] < w[1]) {
            return Err(SpectralError::Unsorted {
                sequence: name,
                index: i + 1,
            });
        }
    }
    let holds = (0..m).all(|i| theta[i] + tol >= eta[i] && eta[i] >= theta[n - m + i] - tol);
    let close = |x: T, y: T| (x - y).abs() <= tol;
    let tight = (0..=m).any(|k| {
        (0..k).all(|i| close(theta[i], eta[i])) && (k..m).all(|i| close(theta[n - m + i], eta[i]))
    });
    Ok(Interlacing { holds, tight })
}
