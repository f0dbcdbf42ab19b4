use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("conductor {conductor} exceeds the configured cap {cap}")]
    ConductorTooLarge { conductor: u64, cap: u32 },
    #[error("invalid conductor lift from {from} to {to}")]
    InvalidLift { from: u32, to: u32 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeds the configured cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u32),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("invalid subgroup embedding: {0}")]
    InvalidEmbedding(String),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("order {order} is not prime to the characteristic {p}")]
    NotPrimeToCharacteristic { order: usize, p: u32 },
    #[error("element is not central in the given group")]
    NotCentral,
    #[error("wrong number of class values: expected {expected}, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("character table unavailable: {0}")]
    TableUnavailable(String),
    #[error("malformed sector data: {0}")]
    MalformedSectors(String),
    #[error("invalid orbit: {0}")]
    InvalidOrbit(String),
    #[error("invalid curve datum: {0}")]
    InvalidDatum(String),
    #[error("invalid matrix group: {0}")]
    InvalidMatrixGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("computation mismatch: {0}")]
    Mismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a configured size cap.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::ConductorTooLarge { .. } | Error::GroupTooLarge { .. } | Error::TableUnavailable(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
