use thiserror::Error;

use crate::sumfree::Witness;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("dilation factor must be positive, got {0}")]
    NonPositiveFactor(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("set is not {k}-sum-free: {witness}")]
    NotSumFree { k: u32, witness: Box<Witness> },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("n = {n} exceeds the exhaustive search budget of {budget}")]
    BudgetExceeded { n: u32, budget: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
