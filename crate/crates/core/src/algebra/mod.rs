//! Exact scalar, polynomial, partition and matrix kernels.

mod matrix;
mod multipoly;
mod partition;
mod schur;
mod upoly;

pub use matrix::{jordan_type, matrix_rank, RationalMatrix, RowSpace};
pub use multipoly::{Monomial, MultiPoly};
pub use partition::{partitions_in_box, Partition};
pub use schur::{complete_homogeneous, schur_evaluate};
pub use upoly::{
    cyclotomic_polynomial, euler_phi, gaussian_binomial, strip_cyclotomic_factors,
    CyclotomicFactor, CyclotomicReduction, IntegerPolynomial,
};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}
