//! Vertex weights, R-matrices and the Yang-Baxter check for both models.
//!
//! Conventions used throughout the crate:
//!
//! * a vertex maps `(left, bottom)` edge states to `(right, top)`; the R-matrix
//!   entry at row `d·left + bottom`, column `d·right + top` is its weight
//!   (`d` = 2 or 3 states per edge);
//! * edge states are indexed `+ = 0`, `- = 1` for the six-vertex model and
//!   `+ = 0`, `0 = 1`, `- = 2` for the nineteen-vertex model;
//! * the vertex in row `i`, column `j` sees the rapidities `(zeta_i, z_j)`;
//!   for the nineteen-vertex model only the ratio `zeta_i / z_j` enters;
//! * square roots are never computed: callers pass `u, v, p` with
//!   `zeta = u^2`, `z = v^2`, `q = p^2`.

pub mod dump;
pub mod nineteen;
pub mod rmatrix;
pub mod six;
pub mod yang_baxter;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use rmatrix::{build_rmatrix, permutation_matrix, RMatrixValue};
pub use yang_baxter::check_yang_baxter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "6v")]
    SixVertex,
    #[serde(rename = "19v")]
    NineteenVertex,
}

impl Model {
    /// Number of states per edge.
    pub fn edge_states(self) -> usize {
        match self {
            Model::SixVertex => 2,
            Model::NineteenVertex => 3,
        }
    }

    /// Charge of each edge-state index, in `{-1, 0, +1}`.
    pub fn charges(self) -> &'static [i8] {
        match self {
            Model::SixVertex => &[1, -1],
            Model::NineteenVertex => &[1, 0, -1],
        }
    }

    pub fn plus(self) -> usize {
        0
    }

    pub fn minus(self) -> usize {
        self.edge_states() - 1
    }

    pub fn transitions(self) -> &'static [Transition] {
        match self {
            Model::SixVertex => &SIX_VERTEX,
            Model::NineteenVertex => &NINETEEN_VERTEX,
        }
    }

    pub fn labels(self) -> &'static [Label] {
        match self {
            Model::SixVertex => &[Label::A, Label::B, Label::C],
            Model::NineteenVertex => &[
                Label::X1,
                Label::X2,
                Label::X3,
                Label::X4,
                Label::X5,
                Label::X6,
                Label::X7,
                Label::Y5,
                Label::Y6,
                Label::Y7,
            ],
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::SixVertex => "6v",
            Model::NineteenVertex => "19v",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "6v" | "six" | "six-vertex" => Ok(Model::SixVertex),
            "19v" | "nineteen" | "nineteen-vertex" | "ik" => Ok(Model::NineteenVertex),
            _ => Err(Error::Parse(format!("unknown model `{s}`"))),
        }
    }
}

/// Weight label of a vertex type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    A,
    B,
    C,
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
    X7,
    Y5,
    Y6,
    Y7,
}

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Label::A => "a",
            Label::B => "b",
            Label::C => "c",
            Label::X1 => "x1",
            Label::X2 => "x2",
            Label::X3 => "x3",
            Label::X4 => "x4",
            Label::X5 => "x5",
            Label::X6 => "x6",
            Label::X7 => "x7",
            Label::Y5 => "y5",
            Label::Y6 => "y6",
            Label::Y7 => "y7",
        }
    }

    /// Weights carrying a single factor of `sqrt(zeta)`: the vertices where
    /// an empty line turns.
    pub fn is_turning(self) -> bool {
        matches!(self, Label::X5 | Label::X6 | Label::Y5 | Label::Y6)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        [
            Label::A,
            Label::B,
            Label::C,
            Label::X1,
            Label::X2,
            Label::X3,
            Label::X4,
            Label::X5,
            Label::X6,
            Label::X7,
            Label::Y5,
            Label::Y6,
            Label::Y7,
        ]
        .into_iter()
        .find(|l| l.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown weight label `{s}`")))
    }
}

/// One nonzero vertex: edge-state indices and its weight label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transition {
    pub left: usize,
    pub bottom: usize,
    pub right: usize,
    pub top: usize,
    pub label: Label,
}

const fn t(left: usize, bottom: usize, right: usize, top: usize, label: Label) -> Transition {
    Transition {
        left,
        bottom,
        right,
        top,
        label,
    }
}

static SIX_VERTEX: [Transition; 6] = [
    t(0, 0, 0, 0, Label::A),
    t(0, 1, 0, 1, Label::B),
    t(0, 1, 1, 0, Label::C),
    t(1, 0, 0, 1, Label::C),
    t(1, 0, 1, 0, Label::B),
    t(1, 1, 1, 1, Label::A),
];

// Row (left, bottom), column (right, top) of the 9x9 array; x1 at the corners.
static NINETEEN_VERTEX: [Transition; 19] = [
    t(0, 0, 0, 0, Label::X1),
    t(0, 1, 0, 1, Label::X2),
    t(0, 1, 1, 0, Label::X5),
    t(0, 2, 0, 2, Label::X3),
    t(0, 2, 1, 1, Label::X6),
    t(0, 2, 2, 0, Label::X7),
    t(1, 0, 0, 1, Label::Y5),
    t(1, 0, 1, 0, Label::X2),
    t(1, 1, 0, 2, Label::Y6),
    t(1, 1, 1, 1, Label::X4),
    t(1, 1, 2, 0, Label::X6),
    t(1, 2, 1, 2, Label::X2),
    t(1, 2, 2, 1, Label::X5),
    t(2, 0, 0, 2, Label::Y7),
    t(2, 0, 1, 1, Label::Y6),
    t(2, 0, 2, 0, Label::X3),
    t(2, 1, 1, 2, Label::Y5),
    t(2, 1, 2, 1, Label::X2),
    t(2, 2, 2, 2, Label::X1),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_conservation() {
        for model in [Model::SixVertex, Model::NineteenVertex] {
            let ch = model.charges();
            for tr in model.transitions() {
                assert_eq!(
                    ch[tr.left] + ch[tr.bottom],
                    ch[tr.right] + ch[tr.top],
                    "{model} {tr:?}"
                );
            }
        }
    }

    #[test]
    fn transition_counts() {
        assert_eq!(Model::SixVertex.transitions().len(), 6);
        assert_eq!(Model::NineteenVertex.transitions().len(), 19);
    }

    #[test]
    fn plus_plus_to_plus_zero_absent() {
        // (+,+) -> (+,0)
        assert!(!Model::NineteenVertex
            .transitions()
            .iter()
            .any(|t| (t.left, t.bottom, t.right, t.top) == (0, 0, 0, 1)));
    }
}
