//! Exact algebra: polynomials, permanents, cyclotomic integers, and the
//! finite-difference coefficient extraction they all cross-check against.

pub mod cyclotomic;
pub mod matrix;
pub mod permanent;
pub mod poly;
pub mod scheim;

pub use cyclotomic::{is_prime, CyclotomicInt};
pub use matrix::RingMatrix;
pub use permanent::{ryser_permanent, ryser_permanent_scalar};
pub use poly::{expand_linear_product, LinearForm, LinearProduct, PolyEval, SparsePolynomial};
pub use scheim::scheim_coefficient;

use crate::scalar::ExactScalar;

/// Commutative ring scalar for polynomials and matrices.
///
/// Constructors are exemplar-based (`zero_like`) because a `CyclotomicInt`
/// cannot be built without knowing its order k.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    #[allow(clippy::wrong_self_convention)] // exemplar receiver, matching zero_like
    fn from_i64_like(&self, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for ExactScalar {
    fn zero_like(&self) -> Self {
        ExactScalar::zero()
    }
    fn one_like(&self) -> Self {
        ExactScalar::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        ExactScalar::from_i64(v)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}
