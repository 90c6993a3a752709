pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod matrices;

pub use error::{Error, Result};
pub use graph::{DistanceData, Graph};
pub use invariants::{fingerprint, related, Fingerprint, Flavor};
pub use matrices::{build_matrix, complement_shift, MatrixKind, ShiftParams};

use num_bigint::BigInt;

pub type IntMatrix = linalg::Matrix<BigInt>;
pub type IntPolynomial = linalg::Polynomial<BigInt>;
pub type InvariantFactors = linalg::InvariantFactors<BigInt>;
pub type RationalPolyDivisors = linalg::RationalPolyDivisors<BigInt>;
