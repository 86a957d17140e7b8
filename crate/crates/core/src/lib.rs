//! Balanced shifting and bipartite rigidity, decided by exact rank
//! computations over a large prime field.
//!
//! Generic real parameters are replaced by uniform random residues. Every
//! randomized answer is repeated under several independent draws and only
//! reported when all draws agree.

pub mod acceptance;
pub mod combinat;
pub mod exactla;
pub mod families;
pub mod rigidity;
pub mod shifting;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Combinat(#[from] combinat::CombinatError),
    #[error(transparent)]
    Trial(#[from] exactla::TrialError),
    #[error(transparent)]
    Field(#[from] exactla::FieldError),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
