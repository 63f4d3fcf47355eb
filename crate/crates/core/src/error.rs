use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    ShapeNotContained { inner: Vec<usize>, outer: Vec<usize> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid two-line array: {0}")]
    InvalidArray(String),

    #[error("pair (P, Q) is not in the image of Hecke insertion: {0}")]
    NotInsertionImage(String),

    #[error("operator index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("K-crystal operators are only defined for single-row and single-column shapes, got {0:?}")]
    KShapeUnsupported(Vec<usize>),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("{0}")]
    Msg(String),
}

impl Error {
    pub fn msg(s: impl Into<String>) -> Self {
        Error::Msg(s.into())
    }
}
