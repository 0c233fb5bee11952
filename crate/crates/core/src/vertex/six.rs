//! Six-vertex weights.
//!
//! ```text
//! a = (q^2 zeta^2 - z^2) / ((q^2 - 1) zeta z)
//! b = q (zeta^2 - z^2)   / ((q^2 - 1) zeta z)
//! c = 1
//! ```

use super::Label;
use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

#[derive(Debug, Clone, PartialEq)]
pub struct Weights6v<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Clone> Weights6v<F> {
    pub fn get(&self, label: Label) -> Option<F> {
        match label {
            Label::A => Some(self.a.clone()),
            Label::B => Some(self.b.clone()),
            Label::C => Some(self.c.clone()),
            _ => None,
        }
    }
}

/// Raw weights at `(zeta, z)`, denominator included.
pub fn weights6v<F: Field>(zeta: &F, z: &F, q: &F) -> Result<Weights6v<F>> {
    let q2 = q.square();
    let q2m1 = q2.clone() - F::one();
    if q2m1.is_zero() {
        return Err(Error::Domain("six-vertex weights need q^2 != 1".into()));
    }
    if zeta.is_zero() || z.is_zero() {
        return Err(Error::Domain(
            "six-vertex weights need nonzero rapidities".into(),
        ));
    }
    let den = q2m1 * zeta * z;
    let a = (q2 * &zeta.square() - &z.square()).div(&den)?;
    let b = (q.clone() * &(zeta.square() - &z.square())).div(&den)?;
    Ok(Weights6v { a, b, c: F::one() })
}

/// Weights multiplied by the common denominator `(q^2 - 1) zeta z`, written in
/// square roots (`zeta = u^2`, `z = v^2`, `q = p^2`). Polynomial in all inputs.
pub fn cleared6v<R: Ring>(label: Label, u: &R, v: &R, p: &R) -> Option<R> {
    let q = p.square();
    let zeta = u.square();
    let z = v.square();
    Some(match label {
        Label::A => q.square() * &zeta.square() - &z.square(),
        Label::B => q * &(zeta.square() - &z.square()),
        Label::C => (q.square() - R::one()) * &zeta * &z,
        _ => return None,
    })
}
