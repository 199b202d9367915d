//! Scalar abstraction shared by the matrix code.
//!
//! Matrix construction and quotient matrices only need field arithmetic, so they
//! work over exact rationals as well as floats. Eigen-solvers additionally need
//! square roots and are restricted to [`Real`].

use std::fmt::Debug;

use num_rational::Rational64;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive};

/// Entry type of a [`SymMatrix`](crate::spectral::SymMatrix).
pub trait Scalar:
    Num + Signed + Copy + PartialOrd + Debug + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Equality used when deciding whether block row sums are constant.
    ///
    /// Exact for rationals; relative tolerance for floats.
    fn same(self, other: Self) -> bool;

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }
}

impl Scalar for f64 {
    fn same(self, other: Self) -> bool {
        (self - other).abs() <= 1e-12 * self.abs().max(other.abs()).max(1.0)
    }
}

impl Scalar for f32 {
    fn same(self, other: Self) -> bool {
        (self - other).abs() <= 1e-5 * self.abs().max(other.abs()).max(1.0)
    }
}

impl Scalar for Rational64 {
    fn same(self, other: Self) -> bool {
        self == other
    }
}

/// Floating-point scalars usable by the eigen-solvers.
pub trait Real: Scalar + Float {
    /// Converts an `f64` constant (tolerances, parameters) into `Self`.
    fn lit(x: f64) -> Self {
        <Self as num_traits::NumCast>::from(x).expect("finite literal")
    }
}

impl Real for f32 {}
impl Real for f64 {}
