//! Recurrences in the lattice size: the six-vertex factors and Izergin's
//! determinant, and the nineteen-vertex factors with the Lagrange
//! reconstruction of `Z_N` from `Z_{N-1}`.
//!
//! Index arguments are 0-based here; `i` names a column rapidity `z_i` and
//! `j` a row rapidity `zeta_j`.

pub mod evaluator;
pub mod nineteen;
pub mod six;

use serde::Serialize;

use crate::error::{Error, Result};

pub use evaluator::{
    EnumeratedNineteen, EnumeratedSix, IzerginEvaluator, LagrangeExtension, PartitionEvaluator,
    Unit,
};

/// Where a partition-function value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Enumerated,
    RecurrenceBuilt,
    Determinant,
}

pub(crate) fn check_index(index: usize, n: usize) -> Result<()> {
    if index >= n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(())
}

/// `xs` with entry `k` removed.
pub fn without<T: Clone>(xs: &[T], k: usize) -> Vec<T> {
    xs.iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, x)| x.clone())
        .collect()
}

/// `xs` with entry `k` replaced.
pub fn with<T: Clone>(xs: &[T], k: usize, value: T) -> Vec<T> {
    let mut out = xs.to_vec();
    out[k] = value;
    out
}
