use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a Fano polygon: {0}")]
    NotFano(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("degenerate cone: generators are zero or parallel")]
    DegenerateCone,
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("edge {0} admits no mutation (width smaller than height)")]
    NoMutation(usize),
    #[error("polygon has no primitive T-cones")]
    NoTCones,
    #[error("quiver size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("basket entry {0} is not residual")]
    NonResidualEntry(String),
    #[error("polygon is not a triangle ({0} vertices)")]
    NotTriangle(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("Hilbert series and Ehrhart count disagree at degree {degree}: series {series}, count {count}")]
    InconsistentHilbert { degree: usize, series: String, count: String },
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
    #[error("table mismatch: {0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures of an internal consistency check, as opposed to bad input.
    pub fn is_cross_check(&self) -> bool {
        matches!(self, Error::InconsistentHilbert { .. } | Error::CrossCheck(_) | Error::Mismatch(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
