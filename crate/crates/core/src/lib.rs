//! Exact domain-wall partition functions for the six-vertex and the
//! Izergin-Korepin nineteen-vertex models.

pub mod determinant;
pub mod error;
pub mod lattice;
pub mod methods;
pub mod recurrence;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod suite;
pub mod symmetric;
pub mod vertex;

pub use error::{Error, Result};
