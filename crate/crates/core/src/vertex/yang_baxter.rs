//! Braid form `Ř₂(y,x) Ř₁(z,x) Ř₂(z,y) = Ř₁(z,y) Ř₂(z,x) Ř₁(y,x)` with
//! `Ř₁ = Ř ⊗ 1`, `Ř₂ = 1 ⊗ Ř` on three edge spaces.

use super::{rmatrix, Label, Model};
use crate::error::{Error, Result};
use crate::scalar::matrix::Matrix;
use crate::scalar::Ring;

/// `LHS - RHS` for rapidity roots `x, y, z` and `q = p^2`, using the
/// denominator-cleared weights (each Ř factor appears once per side, so the
/// scalar normalization cancels).
pub fn check_yang_baxter<R: Ring>(model: Model, x: &R, y: &R, z: &R, p: &R) -> Result<Matrix<R>> {
    check_yang_baxter_with(model, x, y, z, p, &|l, u, v, p| {
        rmatrix::cleared_weight(model, l, u, v, p)
    })
}

/// Same residual with a caller-supplied weight function.
pub fn check_yang_baxter_with<R: Ring>(
    model: Model,
    x: &R,
    y: &R,
    z: &R,
    p: &R,
    weight: &dyn Fn(Label, &R, &R, &R) -> Option<R>,
) -> Result<Matrix<R>> {
    let d = model.edge_states();
    let id = Matrix::<R>::identity(d);
    let perm = rmatrix::permutation_matrix::<R>(d);
    let check = |s: &R, t: &R| -> Result<Matrix<R>> {
        let r = rmatrix::assemble(model, |l| {
            weight(l, s, t, p).ok_or_else(|| Error::Domain(format!("no weight {l}")))
        })?;
        perm.mul(&r)
    };
    let first = |m: &Matrix<R>| m.kron(&id);
    let second = |m: &Matrix<R>| id.kron(m);
    let (yx, zx, zy) = (check(y, x)?, check(z, x)?, check(z, y)?);
    let lhs = second(&yx).mul(&first(&zx))?.mul(&second(&zy))?;
    let rhs = first(&zy).mul(&second(&zx))?.mul(&first(&yx))?;
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{MPoly, Rational, Var};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn holds_at_a_point() {
        for model in [Model::SixVertex, Model::NineteenVertex] {
            let res = check_yang_baxter(model, &r(2, 3), &r(-5, 4), &r(7, 9), &r(3, 5)).unwrap();
            assert!(res.is_zero(), "{model}");
        }
    }

    #[test]
    fn holds_at_coincident_rapidities() {
        for model in [Model::SixVertex, Model::NineteenVertex] {
            let res = check_yang_baxter(model, &r(2, 3), &r(2, 3), &r(7, 9), &r(3, 5)).unwrap();
            assert!(res.is_zero(), "{model}");
        }
    }

    #[test]
    fn six_vertex_holds_symbolically() {
        type P = MPoly<Rational>;
        let res = check_yang_baxter(
            Model::SixVertex,
            &P::var(Var::U(1)),
            &P::var(Var::U(2)),
            &P::var(Var::U(3)),
            &P::var(Var::P),
        )
        .unwrap();
        assert!(res.is_zero());
    }

    #[test]
    fn perturbed_weight_fails() {
        let bump = |l: Label, u: &Rational, v: &Rational, p: &Rational| {
            let w = rmatrix::cleared_weight(Model::NineteenVertex, l, u, v, p)?;
            Some(if l == Label::X4 {
                w + Rational::one()
            } else {
                w
            })
        };
        let res = check_yang_baxter_with(
            Model::NineteenVertex,
            &r(2, 3),
            &r(-5, 4),
            &r(7, 9),
            &r(3, 5),
            &bump,
        )
        .unwrap();
        assert!(!res.is_zero());
    }
}
