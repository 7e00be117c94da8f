//! Error type shared by all engine operations.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("ring construction: {0}")]
    RingConstruction(String),

    #[error("operands belong to different rings")]
    MixedRings,

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    #[error("module has infinite length")]
    InfiniteLength,

    #[error("colon by the zero polynomial")]
    ColonByZero,

    #[error("invalid parameter system: {0}")]
    InvalidParamSystem(String),

    #[error("limit closure chain did not stabilize within cap {cap}")]
    StabilizationCapExceeded { cap: u32 },

    #[error("unmixed component intersection did not stabilize within cap {cap}")]
    UnmixedCapExceeded { cap: u32 },

    #[error("unmixed component certificate failed: {0}")]
    UnmixedCertificate(String),

    #[error("dd-sequence certification missing or failed: {0}")]
    DdCertification(String),

    #[error("positive characteristic required")]
    CharZero,

    #[error("{q} is not a power of the characteristic {p}")]
    NotFrobeniusPower { q: u64, p: u64 },

    #[error("ideal is not primary to the irrelevant maximal ideal")]
    NotIrrelevantPrimary,

    #[error("codimension {found} below the required {required}")]
    CodimTooSmall { required: usize, found: i64 },

    #[error("idealization: {0}")]
    Idealization(String),

    #[error("no p-standard system of parameters found: {0}")]
    PStandardNotFound(String),

    #[error("empty box or malformed bounds")]
    BadBox,

    #[error("need at least {required} data points, got {got}")]
    SeriesTooShort { required: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, EngineError>;
