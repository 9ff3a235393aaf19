use thiserror::Error;

use crate::model::Violation;

pub type Result<T> = std::result::Result<T, MeanderError>;

#[derive(Debug, Error)]
pub enum MeanderError {
    /// The value sequence is not a permutation of `1..=n`.
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// A permutation that is not meandric was used where a meander is required.
    #[error("{perm} is not a meandric permutation ({violation})")]
    NotMeandric { perm: String, violation: Violation },

    #[error("malformed matching: {0}")]
    MalformedMatching(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A composition operation produced no valid meander on any branch.
    #[error("{operation} failed: {detail}")]
    Construction { operation: &'static str, detail: String },

    #[error("injectivity violated: {0}")]
    Injectivity(String),

    #[error("calibration failed at order {order}: {detail}")]
    Calibration { order: usize, detail: String },

    #[error("missing counts for order {0}")]
    MissingCounts(usize),

    #[error("template data error: {0}")]
    Template(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl MeanderError {
    /// Short machine-readable kind, used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            MeanderError::MalformedPermutation(_) => "malformed_permutation",
            MeanderError::Parse { .. } => "parse",
            MeanderError::NotMeandric { .. } => "not_meandric",
            MeanderError::MalformedMatching(_) => "malformed_matching",
            MeanderError::Precondition(_) => "precondition",
            MeanderError::Construction { .. } => "construction",
            MeanderError::Injectivity(_) => "injectivity",
            MeanderError::Calibration { .. } => "calibration",
            MeanderError::MissingCounts(_) => "missing_counts",
            MeanderError::Template(_) => "template",
            MeanderError::Io(_) => "io",
            MeanderError::Json(_) => "json",
            MeanderError::Csv(_) => "csv",
        }
    }
}
