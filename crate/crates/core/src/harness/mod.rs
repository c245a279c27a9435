//! Regenerates the experimental artifacts: stress tables over planted
//! partitions, the null-distribution study of γ, and the modularity
//! breakdown cases. [`output`] writes them under a fixed directory layout.

mod cases;
mod null_study;
pub mod output;
mod reference;
mod stress;

use thiserror::Error;

use crate::metrics::MetricsError;
use crate::stats::StatsError;
use crate::synth::SynthError;

pub use cases::{check_modularity_cases, predicted_modularity, run_cases, CaseCheck, CASE_CSV_HEADER};
pub use null_study::{
    null_graph, run_null_study, run_null_study_with_graph, Histogram, NullGraph, NullStudy, PERCENTILE_LEVELS,
};
pub use reference::{published_cell, published_null, PublishedCell, PublishedNull, PUBLISHED_NULL};
pub use stress::{
    check_row, expected_cell, run_stress, CellCheck, ExpectedCell, StressAxis, StressRow,
    StressScenario, DEFAULT_STEPS, SCALED_SIZE_RANGE, SCALED_TOLERANCE, SIZE_RANGE, STRESS_CLUSTERS, STRESS_TOLERANCE,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
