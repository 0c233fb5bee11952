use thiserror::Error;

use crate::scalar::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inconsistent square root: {0}")]
    InconsistentRoot(String),
    #[error("no binding for variable {0}")]
    MissingBinding(Var),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("coincident rapidities: {0}")]
    Coincident(String),
    #[error("interpolation nodes collide: {0}")]
    NodeCollision(String),
    #[error("non-integer coefficient {coeff} in {what}")]
    Integrity { what: String, coeff: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
}
