//! Spectral sufficient conditions for large fractional matchings.
//!
//! Graphs are simple and undirected ([`Graph`]). The fractional matching
//! number is computed exactly through the bipartite double cover
//! ([`fracmatch`]), spectral radii of `aD + bA` by power iteration cross-checked
//! against a Jacobi eigensolver ([`spectral`]), and the spectral conditions
//! are evaluated as [`Verdict`]s ([`bounds`]).
//!
//! ```
//! use specmatch::{fractional_matching_number, parse_graph6, Graph};
//!
//! let g = parse_graph6("D]o").unwrap(); // K_{2,3}
//! assert_eq!(fractional_matching_number(&g).to_string(), "2");
//! assert_eq!(fractional_matching_number(&Graph::cycle(5)).to_string(), "5/2");
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod families;
pub mod fracmatch;
pub mod graph;
pub mod scalar;
pub mod spectral;

pub use bounds::{BoundQuery, BoundsError, Outcome, TheoremId, Verdict, DEFAULT_EPSILON};
pub use families::FamilyError;
pub use fracmatch::{fractional_matching_number, FracMatchError, FractionalMatching, HalfInt};
pub use graph::{parse_graph6, write_graph6, Graph, GraphError};
pub use num_rational::Rational64;
pub use scalar::{Real, Scalar};
pub use spectral::{SpectralError, SpectralParams, SymMatrix};

/// Double-precision matrix.
pub type Matrix = SymMatrix<f64>;
/// Exact rational matrix, for equitability tests without rounding.
pub type ExactMatrix = SymMatrix<Rational64>;
pub type Params = SpectralParams<f64>;
pub type Quotient = spectral::QuotientMatrix<f64>;
pub type ExactQuotient = spectral::QuotientMatrix<Rational64>;
