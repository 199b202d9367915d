//! Spectra of `J(G: a, b) = a D(G) + b A(G)` and its quotient matrices.

mod closed_form;
mod jacobi;
mod matrix;
mod power;
mod quotient;

use thiserror::Error;

pub use closed_form::{family_quotient_radius, quotient_radius_bipartite};
pub use jacobi::{
    eigen_decomposition, eigenvalues, EigenDecomposition, Spectrum, DEFAULT_TOL, MAX_SWEEPS,
};
pub use matrix::{build_matrix, degree_matrix, SpectralParams, SymMatrix};
pub use power::spectral_radius;
pub use quotient::{interlaces, quotient_matrix, Interlacing, QuotientMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("invalid spectral parameters: {0}")]
    InvalidParams(String),
    #[error("matrix has dimension 0")]
    EmptyMatrix,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry ({row}, {col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("tolerance {0} must be positive")]
    InvalidTolerance(f64),
    #[error("Jacobi did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { off_norm: f64, sweeps: usize },
    #[error("power iteration did not converge in {iterations} iterations (residual {residual:e})")]
    PowerNoConvergence { residual: f64, iterations: usize },
    #[error("power iteration gave {power} but Jacobi gave {jacobi}")]
    CrossCheck { power: f64, jacobi: f64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{sequence} is not non-increasing at index {index}")]
    Unsorted {
        sequence: &'static str,
        index: usize,
    },
    #[error("interlacing needs a strictly longer first sequence ({longer} vs {shorter})")]
    LengthMismatch { longer: usize, shorter: usize },
    #[error("closed form outside its domain: {0}")]
    ClosedFormDomain(String),
}
