use thiserror::Error;

use crate::matroid::AxiomViolation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },

    #[error("groundset of size {0} exceeds the supported maximum of {max}", max = crate::matroid::MAX_GROUNDSET)]
    GroundsetTooLarge(usize),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("axiom violated: {0}")]
    Axiom(#[from] AxiomViolation),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
