use std::fmt;

use thiserror::Error;

/// Which evaluation side a condition, node set or polynomial refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn mirror(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("{location}: {message}")]
    Input { location: String, message: String },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("duplicate {side} node at index {index}")]
    DuplicateNode { side: Side, index: usize },

    #[error("{side} node set is not P-independent (node {index} is redundant); run a consistency reduction first")]
    Dependent { side: Side, index: usize },

    #[error("left node {left} and right node {right} are conjugate")]
    ConjugatePair { left: usize, right: usize },

    #[error("the elements are not conjugate")]
    NotConjugate,

    #[error("psi[{left}][{right}] does not solve its Sylvester equation")]
    SylvesterViolation { left: usize, right: usize },

    #[error("target is not in the conjugacy class of the basis")]
    NotInClass,

    #[error("nodes do not form a P-basis of a single conjugacy class")]
    NotAPBasis,

    #[error("singular linear system")]
    Singular,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("no central multiple of degree <= {0} exists")]
    Unbounded(usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
