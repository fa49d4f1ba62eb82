use thiserror::Error;

/// Errors raised while parsing inputs or validating metric arguments.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed record at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },

    #[error("empty trajectory at line {line} (field `{field}`)")]
    EmptyTrajectory { line: usize, field: String },

    #[error("duplicate id `{id}` at line {line} (first seen at line {first})")]
    DuplicateId {
        id: String,
        line: usize,
        first: usize,
    },

    #[error("non-finite coordinate at line {line}, field `{field}`, point {index}")]
    NonFinite {
        line: usize,
        field: String,
        index: usize,
    },

    #[error("invalid point ({x}, {y}): coordinates must be finite")]
    InvalidPoint { x: f64, y: f64 },

    #[error("trajectory must contain at least one point")]
    EmptyPoints,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("n-gram width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("corpus size mismatch: {candidates} candidates vs {references} references")]
    CorpusMismatch {
        candidates: usize,
        references: usize,
    },

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("trajectory of length {len} is shorter than n = {n}")]
    TooShort { len: usize, n: usize },

    #[error("phase shift {shift} out of range for trajectory of length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },

    #[error("unknown metric `{0}`")]
    UnknownMetric(String),

    #[error("k = {k} exceeds report count {count}")]
    RankOutOfRange { k: usize, count: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
