use crate::graph::Graph;
use crate::scalar::Scalar;

use super::SpectralError;

/// Dense symmetric matrix, row-major. Symmetry is exact by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    /// Builds from the upper triangle (`i <= j`) of `f`, mirroring it below the diagonal.
    pub fn from_upper(n: usize, f: impl Fn(usize, usize) -> T) -> Result<Self, SpectralError> {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                if !x.to_f64().is_some_and(f64::is_finite) {
                    return Err(SpectralError::NonFinite { row: i, col: j });
                }
                m.entries[i * n + j] = x;
                m.entries[j * n + i] = x;
            }
        }
        Ok(m)
    }

    /// Builds from explicit rows, rejecting any asymmetry.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SpectralError::NotSquare {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
            for j in 0..i {
                if row[j] != rows[j][i] {
                    return Err(SpectralError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Self::from_upper(n, |i, j| rows[i][j])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn row_sum(&self, i: usize) -> T {
        self.row(i).iter().fold(T::zero(), |acc, &x| acc + x)
    }

    /// First negative entry, if any.
    pub fn negative_entry(&self) -> Option<(usize, usize)> {
        let pos = self.entries.iter().position(|x| *x < T::zero())?;
        Some((pos / self.n, pos % self.n))
    }

    /// `y = M x`
    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (&m, &v)| acc + m * v)
            })
            .collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> SymMatrix<U> {
        SymMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }
}

/// Coefficients of `J(G: a, b) = a D(G) + b A(G)`, with `a >= 0` and `b > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralParams<T> {
    a: T,
    b: T,
}

impl<T: Scalar> SpectralParams<T> {
    pub fn new(a: T, b: T) -> Result<Self, SpectralError> {
        if a < T::zero() {
            return Err(SpectralError::InvalidParams(format!(
                "a = {a:?} must be >= 0"
            )));
        }
        if b <= T::zero() {
            return Err(SpectralError::InvalidParams(format!(
                "b = {b:?} must be > 0"
            )));
        }
        Ok(SpectralParams { a, b })
    }

    /// `A_alpha = alpha D + (1 - alpha) A` for `0 <= alpha < 1`.
    ///
    /// `alpha = 1` has `b = 0` and is served by [`degree_matrix`] instead.
    pub fn alpha(alpha: T) -> Result<Self, SpectralError> {
        if alpha >= T::one() {
            return Err(SpectralError::InvalidParams(format!(
                "alpha = {alpha:?}: use degree_matrix for alpha = 1"
            )));
        }
        Self::new(alpha, T::one() - alpha)
    }

    pub fn adjacency() -> Self {
        SpectralParams {
            a: T::zero(),
            b: T::one(),
        }
    }

    pub fn signless_laplacian() -> Self {
        SpectralParams {
            a: T::one(),
            b: T::one(),
        }
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }
}

/// `a D(G) + b A(G)`.
pub fn build_matrix<T: Scalar>(g: &Graph, p: &SpectralParams<T>) -> SymMatrix<T> {
    let n = g.order();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        m.entries[v * n + v] = p.a * T::from_count(g.degree(v));
        for &u in g.neighbors(v) {
            m.entries[v * n + u] = p.b;
        }
    }
    m
}

/// `D(G)`, the `alpha = 1` endpoint of the `A_alpha` family.
pub fn degree_matrix<T: Scalar>(g: &Graph) -> SymMatrix<T> {
    let n = g.order();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        m.entries[v * n + v] = T::from_count(g.degree(v));
    }
    m
}
