use thiserror::Error;

use crate::qpoly::PolyQ;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: remainder {remainder}")]
    InexactDivision { remainder: PolyQ },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse polynomial {0:?}")]
    ParsePoly(String),

    #[error("invalid word {0:?}: expected a string over {{U, D}}")]
    InvalidWord(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("operation needs a nonempty word")]
    EmptyWord,

    #[error("{0} is not a Dyck path")]
    NotDyck(String),

    #[error("arc ({0}, {1}) is not an arc of the word")]
    ArcNotPresent(i32, i32),

    #[error("{upper} is not weakly above {lower}")]
    OrderViolation { lower: String, upper: String },

    #[error("sign mismatch: {lower} has sign {eps_lower}, {upper} has sign {eps_upper}")]
    SignMismatch {
        lower: String,
        upper: String,
        eps_lower: u8,
        eps_upper: u8,
    },

    #[error("matrix is not unitriangular at ({0}, {1})")]
    NotUnitriangular(usize, usize),

    #[error("stuck tree: no rule applies to {0}")]
    StuckTree(String),

    #[error("malformed tiling: {0}")]
    MalformedTiling(String),
}

pub type Result<T> = std::result::Result<T, Error>;
