//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    // dataset construction and manipulation
    #[error("dataset is empty ({context})")]
    EmptyDataset { context: String },
    #[error("feature dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sensitive attribute must be 0 or 1, found {found} at example {index}")]
    InvalidSensitive { found: u8, index: usize },
    #[error("sensitive group {group} is absent ({context})")]
    MissingGroup { group: u8, context: String },
    #[error("example {index} is labeled but its ground truth is negative")]
    LabeledNegative { index: usize },
    #[error("example {index} has no ground truth but the operation requires it")]
    MissingGroundTruth { index: usize },
    #[error("label frequency must lie in (0, 1], got {0}")]
    InvalidLabelFrequency(f64),
    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),
    #[error("split fractions ({0}, {1}) must be positive and sum to 1")]
    InvalidFractions(f64, f64),
    #[error("split would leave {what} empty in the {part} part")]
    DegenerateSplit { what: String, part: &'static str },

    // csv ingestion
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv error in {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("column {column:?} not found in {path}")]
    MissingColumn { column: String, path: PathBuf },
    #[error("row {row}: value {value:?} in column {column:?} is not covered by the schema mapping")]
    UnmappedValue {
        row: usize,
        column: String,
        value: String,
    },
    #[error("row {row}: cannot parse {value:?} in numeric column {column:?}")]
    BadNumeric {
        row: usize,
        column: String,
        value: String,
    },
    #[error("no rows left after filtering {path}")]
    EmptyAfterFilter { path: PathBuf },
    #[error("invalid schema: {0}")]
    InvalidSchema(String),

    // base model and scoring
    #[error("training targets contain a single class")]
    SingleClass,
    #[error("non-finite feature value at example {index}")]
    NonFiniteFeature { index: usize },
    #[error("scorer produced {value} outside [0, 1]")]
    ScoreOutOfRange { value: f64 },
    #[error("validation set has no labeled examples")]
    NoLabeledExamples,
    #[error("model file {path}: {reason}")]
    ModelFormat { path: PathBuf, reason: String },
    #[error("unsupported format version {found} (this build reads version {expected})")]
    FormatVersion { found: u32, expected: u32 },

    // evaluation
    #[error("group {group} has no {what}; {rate} is undefined")]
    UndefinedRate {
        group: u8,
        what: &'static str,
        rate: &'static str,
    },
    #[error("aligned inputs differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    // experiment configuration
    #[error("invalid config: {0}")]
    InvalidConfig(String),
}
