use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, Rational, Ring};
use crate::error::{Error, Result};

/// Element `c0 + c1 p + c2 p^2 + c3 p^3` of Q(p), p a primitive twelfth root of
/// unity, stored reduced modulo the minimal polynomial `p^4 - p^2 + 1`.
///
/// With `q = p^2` this field has `q^3 = -1`, `q^2 - q + 1 = 0` and an exact
/// square root of `q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclo12 {
    coeffs: [Rational; 4],
}

impl Cyclo12 {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Cyclo12 { coeffs }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyclo12::new(c.map(Rational::from))
    }

    /// The generator p.
    pub fn p() -> Self {
        Cyclo12::from_ints([0, 1, 0, 0])
    }

    /// q = p^2, a primitive sixth root of unity.
    pub fn q() -> Self {
        Cyclo12::from_ints([0, 0, 1, 0])
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Ring::is_zero)
            .then_some(&self.coeffs[0])
    }

    /// Reduce a coefficient list of arbitrary length using p^k = p^{k-2} - p^{k-4}.
    fn reduce(mut c: Vec<Rational>) -> Self {
        for k in (4..c.len()).rev() {
            let top = std::mem::take(&mut c[k]);
            if top.is_zero() {
                continue;
            }
            c[k - 2] = c[k - 2].clone() + &top;
            c[k - 4] = c[k - 4].clone() - &top;
        }
        c.resize(4, Rational::zero());
        let mut it = c.into_iter();
        Cyclo12::new(std::array::from_fn(|_| it.next().unwrap()))
    }

    /// Matrix of multiplication by `self` in the basis 1, p, p^2, p^3.
    fn mul_matrix(&self) -> [[Rational; 4]; 4] {
        let mut m: [[Rational; 4]; 4] = Default::default();
        for j in 0..4 {
            let mut e = [0i64; 4];
            e[j] = 1;
            let col = self.clone() * Cyclo12::from_ints(e);
            for i in 0..4 {
                m[i][j] = col.coeffs[i].clone();
            }
        }
        m
    }
}

impl From<Rational> for Cyclo12 {
    fn from(r: Rational) -> Self {
        Cyclo12::new([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }
}

impl fmt::Display for Cyclo12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "[{a},{b},{c},{d}]")
    }
}

impl fmt::Debug for Cyclo12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclo12 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) else {
            return Ok(Cyclo12::from(s.parse::<Rational>()?));
        };
        let parts = body
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected 4 coefficients in `{s}`")));
        }
        Ok(Cyclo12::reduce(parts))
    }
}

impl Serialize for Cyclo12 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cyclo12 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Cyclo12> for Cyclo12 {
    type Output = Cyclo12;
    fn add(mut self, rhs: &'a Cyclo12) -> Cyclo12 {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = &*a + b;
        }
        self
    }
}

impl<'a> Sub<&'a Cyclo12> for Cyclo12 {
    type Output = Cyclo12;
    fn sub(mut self, rhs: &'a Cyclo12) -> Cyclo12 {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = &*a - b;
        }
        self
    }
}

impl<'a> Mul<&'a Cyclo12> for Cyclo12 {
    type Output = Cyclo12;
    fn mul(self, rhs: &'a Cyclo12) -> Cyclo12 {
        let mut out = vec![Rational::zero(); 7];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Cyclo12::reduce(out)
    }
}

macro_rules! owned_rhs {
    ($tr:ident, $method:ident) => {
        impl $tr for Cyclo12 {
            type Output = Cyclo12;
            fn $method(self, rhs: Cyclo12) -> Cyclo12 {
                self.$method(&rhs)
            }
        }
    };
}

owned_rhs!(Add, add);
owned_rhs!(Sub, sub);
owned_rhs!(Mul, mul);

impl Neg for Cyclo12 {
    type Output = Cyclo12;
    fn neg(self) -> Cyclo12 {
        Cyclo12::new(self.coeffs.map(|c| -c))
    }
}

impl Ring for Cyclo12 {
    fn zero() -> Self {
        Cyclo12::default()
    }

    fn one() -> Self {
        Cyclo12::from_ints([1, 0, 0, 0])
    }

    fn from_rational(r: &Rational) -> Self {
        Cyclo12::from(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl Field for Cyclo12 {
    /// Solves `self * x = 1` by Gauss-Jordan elimination on the
    /// multiplication matrix; it is invertible for every nonzero element
    /// because the minimal polynomial is irreducible.
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.mul_matrix();
        let mut aug: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                let mut row = m[i].to_vec();
                row.push(if i == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            aug.swap(col, pivot);
            let inv_pivot = aug[col][col].inv()?;
            for entry in aug[col].iter_mut() {
                *entry = &*entry * &inv_pivot;
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row) {
                    *entry = &*entry - &(&factor * p);
                }
            }
        }
        let mut it = aug.into_iter().map(|row| row[4].clone());
        Ok(Cyclo12::new(std::array::from_fn(|_| it.next().unwrap())))
    }

    /// Only elements of the rational subfield are tried.
    fn sqrt_exact(&self) -> Option<Self> {
        let r = self.as_rational()?.sqrt_exact()?;
        Some(Cyclo12::from_rational(&r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: [i64; 4]) -> Cyclo12 {
        Cyclo12::from_ints(v)
    }

    #[test]
    fn minimal_polynomial_reduction() {
        let p = Cyclo12::p();
        assert_eq!(p.clone() * p.pow(3), c([-1, 0, 1, 0]));
        assert_eq!(Cyclo12::q().pow(3), -Cyclo12::one());
        assert_eq!(p.pow(6), -Cyclo12::one());
        assert_eq!(p.pow(12), Cyclo12::one());
    }

    #[test]
    fn cubic_root_identities() {
        let q = Cyclo12::q();
        let qi = q.inv().unwrap();
        assert!((q.square() - &q + &Cyclo12::one()).is_zero());
        assert_eq!(q + &qi, Cyclo12::one());
    }

    #[test]
    fn inverse_of_generator() {
        // p * (p - p^3) = p^2 - p^4 = 1
        assert_eq!(Cyclo12::p().inv().unwrap(), c([0, 1, 0, -1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Cyclo12::zero().inv(), Err(Error::DivisionByZero));
        assert!(Cyclo12::one().div(&Cyclo12::zero()).is_err());
    }

    #[test]
    fn text_round_trip() {
        let x = Cyclo12::new([
            Rational::new(1, 2).unwrap(),
            Rational::from(-3),
            Rational::zero(),
            Rational::new(5, 7).unwrap(),
        ]);
        assert_eq!(x.to_string(), "[1/2,-3,0,5/7]");
        assert_eq!(x.to_string().parse::<Cyclo12>().unwrap(), x);
    }
}
