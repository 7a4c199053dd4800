use thiserror::Error;

/// Errors raised by the engine.
///
/// `NoSolution` never appears here: an inconsistent linear system is an
/// ordinary value (`None`) returned by [`crate::qlinalg::solve`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("map does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("Galois map is not invertible (rank {rank} of {dim})")]
    NotInvertible { rank: usize, dim: usize },
    #[error("module is not finitely generated projective: {0}")]
    NotProjective(String),
    #[error("not a duality module: Ext^n(A,U) nonzero in degrees {degrees:?}")]
    NotDuality { degrees: Vec<usize> },
    #[error("chain map lift failed in degree {degree}")]
    LiftFailed { degree: usize },
    #[error("degree {requested} outside the certified window 0..={window}")]
    WindowExceeded { requested: usize, window: usize },
    #[error("PBW degree {degree} exceeds bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
