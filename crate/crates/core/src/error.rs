use thiserror::Error;

use crate::seq::Degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiaisonError {
    #[error("{0} is undefined for an arithmetically Cohen-Macaulay curve (h1 = 0)")]
    Acm(&'static str),

    #[error("invalid curve data: {0}")]
    InvalidData(String),

    #[error("no surface of degree {f} contains the curve (alpha = {alpha})")]
    NoSurface { f: Degree, alpha: Degree },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("missing input: {0}")]
    MissingInput(&'static str),

    #[error("domination violated: {0}")]
    Domination(String),
}

pub type Result<T, E = LiaisonError> = std::result::Result<T, E>;
