use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("table is not a quasigroup (not Latin)")]
    NotLatin,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid invariant chain: {0}")]
    InvalidChain(String),

    #[error("endomorphism is not invertible")]
    NotInvertible,

    #[error("enumeration budget of {budget} exceeded ({what})")]
    BudgetExceeded { budget: usize, what: String },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("invalid twist: {0}")]
    InvalidTwist(String),

    #[error("table is neither an AG-group nor a Bol* quasigroup")]
    NotRecoverable,

    #[error("order {0} is outside the catalog range 1..=20")]
    OutOfCatalog(usize),

    #[error("order {order} is too large for the brute-force oracle (max {max})")]
    OracleTooLarge { order: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
