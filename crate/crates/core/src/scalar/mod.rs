//! Exact arithmetic tower: big rationals, the twelfth cyclotomic field and
//! sparse multivariate polynomials over either.
//!
//! Everything here is immutable and exact. Equality is structural equality of
//! canonical forms, so `==` is the identity test used by every verification
//! routine in the crate.

mod cyclo;
pub mod matrix;
mod mpoly;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use cyclo::Cyclo12;
pub use mpoly::{Bindings, MPoly, Monomial, Var};
pub use rational::Rational;

use crate::error::{Error, Result};

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

/// A ring where every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }

    /// A square root inside the field, when one is found. `None` means
    /// "not found", not "does not exist".
    fn sqrt_exact(&self) -> Option<Self> {
        None
    }

    /// Integer power, negative exponents through the inverse.
    fn powi(&self, exp: i64) -> Result<Self> {
        let magnitude = u32::try_from(exp.unsigned_abs())
            .map_err(|_| Error::Domain(format!("exponent {exp} too large")))?;
        let positive = self.pow(magnitude);
        if exp < 0 {
            positive.inv()
        } else {
            Ok(positive)
        }
    }
}

/// Rings admitting division when the quotient exists in the ring.
///
/// Needed by fraction-free elimination, which divides by the previous pivot.
pub trait ExactDiv: Ring {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl<F: Field> ExactDiv for F {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
}

/// Product of a slice of ring elements.
pub fn product<'a, R: Ring + 'a>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc * x)
}

/// Sum of a slice of ring elements.
pub fn sum<'a, R: Ring + 'a>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc + x)
}
