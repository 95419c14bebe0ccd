use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error(
        "invalid bounds at index {index}: lower {lower} must be finite and below upper {upper}"
    )]
    InvalidBounds {
        index: usize,
        lower: f64,
        upper: f64,
    },

    #[error("objective `{problem}` returned non-finite value {value} at {point:?}")]
    NonFinite {
        problem: String,
        value: f64,
        point: Vec<f64>,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(
        "cannot place {requested} region centers: only {placed} fit before the separation \
         threshold dropped below its floor {floor}"
    )]
    RegionPlacement {
        requested: usize,
        placed: usize,
        floor: f64,
    },

    #[error("membership probabilities need at least one group")]
    NoGroups,

    #[error("unknown benchmark `{0}`")]
    UnknownBenchmark(String),
}

impl Error {
    /// True for errors caused by invalid user input rather than a failure
    /// during a run.
    pub fn is_config(&self) -> bool {
        !matches!(self, Error::NonFinite { .. } | Error::NoGroups)
    }
}
