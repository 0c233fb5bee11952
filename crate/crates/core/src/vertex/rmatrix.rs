use serde::Serialize;

use super::{nineteen, six, Label, Model};
use crate::error::{Error, Result};
use crate::scalar::matrix::Matrix;
use crate::scalar::{Field, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `R`, rows `(left, bottom)`, columns `(right, top)`.
    Plain,
    /// `P * R`.
    Checked,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RMatrixValue<R: Ring> {
    pub model: Model,
    pub orientation: Orientation,
    pub matrix: Matrix<R>,
}

/// `P = sum e_ab ⊗ e_ba` on `d^2` states.
pub fn permutation_matrix<R: Ring>(d: usize) -> Matrix<R> {
    Matrix::from_fn(d * d, d * d, |i, j| {
        if j == (i % d) * d + i / d {
            R::one()
        } else {
            R::zero()
        }
    })
}

/// Places each transition's weight at its layout position.
pub fn assemble<R: Ring>(model: Model, weight: impl Fn(Label) -> Result<R>) -> Result<Matrix<R>> {
    let d = model.edge_states();
    let mut m = Matrix::zeros(d * d, d * d);
    for tr in model.transitions() {
        m.set(
            d * tr.left + tr.bottom,
            d * tr.right + tr.top,
            weight(tr.label)?,
        );
    }
    Ok(m)
}

fn orient<R: Ring>(model: Model, m: Matrix<R>, checked: bool) -> Result<RMatrixValue<R>> {
    let (matrix, orientation) = if checked {
        (
            permutation_matrix(model.edge_states()).mul(&m)?,
            Orientation::Checked,
        )
    } else {
        (m, Orientation::Plain)
    };
    Ok(RMatrixValue {
        model,
        orientation,
        matrix,
    })
}

/// R-matrix with raw weights for the pair of rapidities `(u^2, v^2)`.
pub fn build_rmatrix<F: Field>(
    model: Model,
    u: &F,
    v: &F,
    p: &F,
    checked: bool,
) -> Result<RMatrixValue<F>> {
    let q = p.square();
    let m = match model {
        Model::SixVertex => {
            let w = six::weights6v(&u.square(), &v.square(), &q)?;
            assemble(model, |l| Ok(w.get(l).expect("six-vertex label")))?
        }
        Model::NineteenVertex => {
            if v.is_zero() {
                return Err(Error::Domain("zero rapidity".into()));
            }
            let root = u.div(v)?;
            let zeta = root.square();
            assemble(model, |l| nineteen::weights19v(l, &zeta, &root, &q, p))?
        }
    };
    orient(model, m, checked)
}

/// Same layout with the denominator-cleared weights; polynomial entries.
pub fn build_rmatrix_cleared<R: Ring>(
    model: Model,
    u: &R,
    v: &R,
    p: &R,
    checked: bool,
) -> Result<RMatrixValue<R>> {
    let m = assemble(model, |l| {
        cleared_weight(model, l, u, v, p)
            .ok_or_else(|| Error::Domain(format!("{l} is not a {model} weight")))
    })?;
    orient(model, m, checked)
}

pub fn cleared_weight<R: Ring>(model: Model, label: Label, u: &R, v: &R, p: &R) -> Option<R> {
    match model {
        Model::SixVertex => six::cleared6v(label, u, v, p),
        Model::NineteenVertex => nineteen::cleared19v(label, u, v, p),
    }
}
