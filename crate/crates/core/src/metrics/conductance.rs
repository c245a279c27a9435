use crate::graph::{Clustering, Graph};

use super::{ClusterTally, MetricsError};

/// Per-cluster conductance φ(c_i) and the graph-level minimum Φ.
///
/// φ(c_i) = ∂(c_i) / min(d(c_i), d(V∖c_i)) where ∂ is the boundary weight and
/// d the degree volume. It is `None` when that denominator is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ConductanceReport {
    pub per_cluster: Vec<Option<f64>>,
    /// Minimum over the defined φ values; `None` if none is defined.
    pub graph_level: Option<f64>,
}

impl ConductanceReport {
    pub(super) fn from_tally(tally: &ClusterTally) -> Self {
        let l = tally.intra.len();
        let volumes: Vec<f64> = (0..l).map(|i| tally.volume(i)).collect();
        let total = 2.0 * tally.total_weight;
        let positive = volumes.iter().filter(|&&v| v > 0.0).count();
        let per_cluster: Vec<Option<f64>> = (0..l)
            .map(|i| {
                let inside = volumes[i];
                // the rest is empty exactly when no other cluster has volume
                let only_this = positive == 0 || (positive == 1 && inside > 0.0);
                let outside = if only_this { 0.0 } else { (total - inside).max(0.0) };
                let denom = inside.min(outside);
                (denom > 0.0).then(|| (tally.boundary[i] / denom).clamp(0.0, 1.0))
            })
            .collect();
        let graph_level = per_cluster
            .iter()
            .flatten()
            .copied()
            .min_by(f64::total_cmp);
        Self {
            per_cluster,
            graph_level,
        }
    }
}

pub fn conductance(g: &Graph, c: &Clustering) -> Result<ConductanceReport, MetricsError> {
    let tally = ClusterTally::compute(g, c)?;
    Ok(ConductanceReport::from_tally(&tally))
}
