//! Monte-Carlo null distribution of γ under random relabeling, the modified
//! t-test built on it, and the clustering assessment routine.

mod assess;
mod gaussian;
mod null;
mod special;
mod ttest;

use thiserror::Error;

use crate::metrics::MetricsError;
use crate::synth::SynthError;

pub use assess::{
    assess, assess_with, compare, AssessConfig, Classification, Comparison, Condition,
    RankedVerdict, Verdict, COMPARISON_NOTE, VERDICT_CSV_HEADER,
};
pub use gaussian::{gaussian_percentiles, ks_critical_value, ks_distance_normal, PercentilePair};
pub use null::{simulate_null, NullSample};
pub use special::student_t_sf;
pub use ttest::{modified_t_test, TTest, P_VALUE_FLOOR};

/// Smallest run count for which the routine reports a statistical verdict
/// without a warning.
pub const MIN_RUNS_FOR_VERDICT: usize = 31;

/// Default Monte-Carlo run count.
pub const DEFAULT_RUNS: usize = 35;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("null simulation needs 2 <= clusters <= vertices, got {clusters} clusters for {vertices} vertices")]
    InvalidClusterCount { clusters: usize, vertices: usize },
    #[error("need at least 2 simulation runs, got {0}")]
    TooFewRuns(usize),
    #[error("degrees of freedom must be at least 1, got {0}")]
    InvalidDf(usize),
    #[error("comparison needs at least 2 clusterings, got {0}")]
    TooFewClusterings(usize),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Synth(#[from] SynthError),
}
