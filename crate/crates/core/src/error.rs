use thiserror::Error;

use crate::arrows::Arrow;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("partition parts must be positive and weakly decreasing")]
    NotMonotone,
    #[error("a monomial ideal needs at least one generator")]
    EmptyIdeal,
    #[error("the ideal does not have finite colength")]
    InfiniteColength,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0} is not a positive significant arrow")]
    NotPositiveSignificant(Arrow),
    #[error("the two ideals have different Hilbert functions")]
    HilbertFunctionMismatch,
    #[error("no monomial ideal has the requested Hilbert function")]
    NotAHilbertFunction,
    #[error("the poset has no unique maximal element")]
    NoUniqueMaximum,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
}
