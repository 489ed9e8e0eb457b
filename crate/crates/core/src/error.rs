use thiserror::Error;

use crate::partitions::{Cell, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("box {cell} lies outside the diagram of {shape}")]
    CellOutsideDiagram { cell: Cell, shape: Partition },

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("variable count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("the zero polynomial has no top homogeneous part")]
    ZeroPolynomial,

    #[error("polynomial is not BC-symmetric: {0}")]
    NotBcSymmetric(String),

    #[error("zero denominator in b-factor at box {cell} of {shape}")]
    ZeroDenominator { cell: Cell, shape: Partition },

    #[error("singular Scheunert denominator: entries {0} and {1} of weight+rho coincide")]
    SingularScheunert(usize, usize),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("expansion failed: {0}")]
    ExpansionFailed(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
