//! Exact scalars and linear algebra: ℚ, ℚ(i), 𝔽_p, dense matrices, binary forms.

mod binary_form;
mod gaussian;
mod matrix;
mod poly;
mod prime_field;
mod rational;
mod sparse;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use binary_form::{binary_form_gcd, BinaryForm};
pub use gaussian::{rational_sqrt, GaussianRational};
pub use matrix::{is_nilpotent, matrix_rank, ExactMatrix, Matrix};
pub use poly::UniPoly;
pub use prime_field::{is_prime, PrimeField, PrimeFieldElement};
pub use rational::Rational;
pub use sparse::SparseEchelon;

/// Minimal field interface shared by the exact scalar types.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }
}
