//! Density-based clustering quality assessment for undirected graphs.
//!
//! The crate computes the density family of a clustering (global density K,
//! per-cluster κ_i, per-pair κ_ij, their means and the gap γ), the classical
//! modularity and conductance measures, and a Monte-Carlo calibrated t-test
//! of γ against random relabelings. [`synth`] and [`harness`] generate the
//! synthetic graphs and regenerate the stress and null-distribution tables.

pub mod graph;
pub mod harness;
pub mod io;
pub mod metrics;
pub mod par;
pub mod rng;
pub mod stats;
pub mod sum;
pub mod synth;

#[cfg(test)]
pub(crate) mod fixtures;

pub use graph::{Clustering, Graph, GraphError};
pub use metrics::{
    conductance, density_report, evaluate, global_density, modularity, ConductanceReport,
    DensityReport, MetricsError, QualityReport,
};
pub use stats::{assess, compare, simulate_null, NullSample, Verdict};

/// Any error raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Stats(#[from] stats::StatsError),
    #[error(transparent)]
    Synth(#[from] synth::SynthError),
    #[error(transparent)]
    Parse(#[from] io::ParseError),
    #[error(transparent)]
    Harness(#[from] harness::HarnessError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
