use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("incompatible input: {0}")]
    Incompatible(String),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("inadmissible q={q}: {reason}")]
    InadmissibleQ { q: u64, reason: String },
    #[error("no label matches: {0}")]
    NoLabel(String),
    #[error("oracle failure: {0}")]
    Oracle(String),
    #[error("matching failed: {0}")]
    Match(String),
}

pub type Result<T> = std::result::Result<T, Error>;
