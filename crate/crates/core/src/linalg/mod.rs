//! Exact linear algebra over integer rings: determinants, characteristic and
//! cofactor polynomials, Smith normal form, and determinantal divisors of
//! `xI - M` over the rationals.
//!
//! Everything is generic over [`Scalar`], an integer type from `num-traits`
//! (`i64`, `i128`, `BigInt`). The crate root re-exports the `BigInt`
//! instantiations used by the graph layers.

mod det;
mod detgcd;
mod matrix;
mod poly;
mod snf;

#[cfg(test)]
pub(crate) mod oracle;

pub use det::{charpoly, cof_polynomial, determinant, IntegralDomain};
pub use detgcd::{determinantal_gcds_qx, RationalPolyDivisors, DETGCD_MAX_N};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use snf::{smith_normal_form, InvariantFactors};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};
use std::fmt::{Debug, Display};

/// Exact integer scalar: a Euclidean ring with signs and conversions from
/// machine integers.
pub trait Scalar:
    Clone + Debug + Display + Integer + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("scalar must represent i64 values")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Integer + Signed + FromPrimitive + Send + Sync + 'static
{
}
