//! Clustering quality measures: the density family (global, intra-cluster,
//! inter-cluster, and their gap γ), modularity, and conductance.
//!
//! All measures work on unweighted graphs (edge counts) and weighted graphs
//! (weight sums). Every entry point builds a [`ClusterTally`] once; the
//! [`evaluate`] helper shares one tally across all measures.

mod classic;
mod conductance;
mod density;
mod modularity;
mod tally;

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Clustering, Graph};

pub use classic::{classic_standard_error, ClassicStandardError};
pub use conductance::{conductance, ConductanceReport};
pub use density::{
    density_report, gamma, global_density, inter_density, intra_density, DensityReport,
    InterDensities,
};
pub use modularity::modularity;
pub use tally::ClusterTally;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricsError {
    #[error("clustering covers {clustering} vertices but the graph has {graph}")]
    SizeMismatch { graph: usize, clustering: usize },
    #[error("global density needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("modularity is undefined for a graph without edges")]
    NoEdges,
    #[error("classic standard error needs at least 3 clusters, got {0}")]
    TooFewClusters(usize),
}

/// Header of the flat quality row written by [`QualityReport::csv_row`].
pub const QUALITY_CSV_HEADER: &str = "N,l,m,K,K_intra,K_inter,gamma,Phi,Q,weighted";

/// Densities, conductance and modularity of one clustering.
#[derive(Debug, Clone, PartialEq)]
pub struct QualityReport {
    pub density: DensityReport,
    pub conductance: ConductanceReport,
    /// `None` when the graph has no edges.
    pub modularity: Option<f64>,
}

impl QualityReport {
    pub fn csv_row(&self) -> String {
        let d = &self.density;
        let mut row = String::new();
        let _ = write!(
            row,
            "{},{},{},{},{},{},{},{},{},{}",
            d.vertex_count,
            d.cluster_count,
            d.edge_count,
            fmt_value(d.global_density),
            fmt_value(d.mean_intra),
            fmt_value(d.mean_inter),
            fmt_value(d.gamma),
            fmt_opt(self.conductance.graph_level),
            fmt_opt(self.modularity),
            d.weighted
        );
        row
    }
}

/// Computes every measure from a single pass over the edges.
pub fn evaluate(g: &Graph, c: &Clustering) -> Result<QualityReport, MetricsError> {
    let tally = ClusterTally::compute(g, c)?;
    Ok(QualityReport {
        density: DensityReport::from_tally(g, c, &tally)?,
        conductance: ConductanceReport::from_tally(&tally),
        modularity: modularity::from_tally(&tally).ok(),
    })
}

pub fn fmt_value(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else {
        format!("{x}")
    }
}

pub fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "NaN".to_string(), fmt_value)
}
