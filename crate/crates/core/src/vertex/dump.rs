//! Machine-readable weight tables.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{rmatrix, Label, Model};
use crate::scalar::{MPoly, Rational, Var};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightEntry {
    /// The raw weight as a formula in the ratio argument.
    pub raw: &'static str,
    /// The cleared weight in `u, v, p` as a sorted term list.
    pub cleared: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightDump {
    pub model: Model,
    pub weights: BTreeMap<Label, WeightEntry>,
}

fn raw_formula(label: Label) -> &'static str {
    match label {
        Label::A => "(q^2*zeta^2 - z^2)/((q^2 - 1)*zeta*z)",
        Label::B => "q*(zeta^2 - z^2)/((q^2 - 1)*zeta*z)",
        Label::C => "1",
        Label::X1 => "(zeta*q^2 - 1)*(zeta*q^3 + 1)",
        Label::X2 => "(zeta - 1)*q*(zeta*q^3 + 1)",
        Label::X3 => "(zeta - 1)*q^2*(zeta*q + 1)",
        Label::X4 => "-zeta + zeta*q^5 + zeta*(zeta - 1)*q^4 - zeta*q^3 + zeta*q^2 + (zeta - 1)*q",
        Label::X5 => "sqrt(zeta)*(q^2 - 1)*(zeta*q^3 + 1)",
        Label::X6 => "-sqrt(zeta)*(zeta - 1)*sqrt(q)*(q^2 - 1)",
        Label::X7 => "zeta*(q^2 - 1)*(zeta*q^3 + (zeta - 1)*q + 1)",
        Label::Y5 => "sqrt(zeta)*(q^2 - 1)*(zeta*q^3 + 1)",
        Label::Y6 => "sqrt(zeta)*(zeta - 1)*q^(5/2)*(q^2 - 1)",
        Label::Y7 => "(q^2 - 1)*(zeta*q^3 - (zeta - 1)*q^2 + 1)",
    }
}

pub fn weight_dump(model: Model) -> WeightDump {
    type P = MPoly<Rational>;
    let (u, v, p) = (P::var(Var::U(1)), P::var(Var::V(1)), P::var(Var::P));
    let weights = model
        .labels()
        .iter()
        .map(|&l| {
            let cleared = rmatrix::cleared_weight(model, l, &u, &v, &p)
                .expect("label belongs to model")
                .term_list();
            (
                l,
                WeightEntry {
                    raw: raw_formula(l),
                    cleared,
                },
            )
        })
        .collect();
    WeightDump { model, weights }
}
