use crate::graph::{Clustering, Graph};
use crate::sum::{order_free_mean, order_free_sum};

use super::{ClusterTally, MetricsError};

/// Inter-cluster densities κ_ij for all `ℓ(ℓ−1)/2` cluster pairs.
///
/// Only non-zero pairs are stored; every other pair has density 0.
#[derive(Debug, Clone, PartialEq)]
pub struct InterDensities {
    cluster_count: usize,
    nonzero: Vec<((u32, u32), f64)>,
}

impl InterDensities {
    pub fn cluster_count(&self) -> usize {
        self.cluster_count
    }

    pub fn pair_count(&self) -> usize {
        self.cluster_count * self.cluster_count.saturating_sub(1) / 2
    }

    /// κ_ij for `i != j` (order of the arguments does not matter).
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let key = if i < j { (i as u32, j as u32) } else { (j as u32, i as u32) };
        self.nonzero
            .binary_search_by_key(&key, |p| p.0)
            .map_or(0.0, |k| self.nonzero[k].1)
    }

    /// Pairs with at least one connecting edge, sorted by `(i, j)`.
    pub fn nonzero(&self) -> &[((u32, u32), f64)] {
        &self.nonzero
    }

    /// Every pair `(i, j)`, `i < j`, including zero-density pairs.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        let l = self.cluster_count;
        (0..l).flat_map(move |i| (i + 1..l).map(move |j| ((i, j), self.get(i, j))))
    }

    pub(crate) fn mean(&self) -> f64 {
        if self.pair_count() == 0 {
            return 0.0;
        }
        let values: Vec<f64> = self.nonzero.iter().map(|p| p.1).collect();
        order_free_sum(&values) / self.pair_count() as f64
    }
}

/// The density family for one clustering.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub vertex_count: usize,
    pub cluster_count: usize,
    pub edge_count: usize,
    /// K: edge count (or weight) over the `N(N−1)/2` possible pairs.
    pub global_density: f64,
    /// κ_i per cluster; 0 for clusters with fewer than two vertices.
    pub intra_per_cluster: Vec<f64>,
    pub inter_per_pair: InterDensities,
    /// Unweighted mean of κ_i over all ℓ clusters.
    pub mean_intra: f64,
    /// Unweighted mean of κ_ij over all cluster pairs; 0 when ℓ = 1.
    pub mean_inter: f64,
    /// `mean_intra − mean_inter`.
    pub gamma: f64,
    pub weighted: bool,
}

impl DensityReport {
    pub(crate) fn from_tally(
        g: &Graph,
        c: &Clustering,
        tally: &ClusterTally,
    ) -> Result<Self, MetricsError> {
        let global_density = global_density(g)?;
        let intra_per_cluster = intra_from_tally(c, tally);
        let inter_per_pair = inter_from_tally(c, tally);
        let mean_intra = order_free_mean(&intra_per_cluster);
        let mean_inter = inter_per_pair.mean();
        Ok(Self {
            vertex_count: g.vertex_count(),
            cluster_count: c.cluster_count(),
            edge_count: g.edge_count(),
            global_density,
            intra_per_cluster,
            inter_per_pair,
            mean_intra,
            mean_inter,
            gamma: mean_intra - mean_inter,
            weighted: g.is_weighted(),
        })
    }

    /// `K̄_inter < K < K̄_intra`, strict, no tolerance.
    pub fn inequalities_hold(&self) -> bool {
        self.mean_inter < self.global_density && self.global_density < self.mean_intra
    }
}

fn pairs_within(n: usize) -> f64 {
    n as f64 * (n as f64 - 1.0) / 2.0
}

fn intra_from_tally(c: &Clustering, tally: &ClusterTally) -> Vec<f64> {
    c.sizes()
        .iter()
        .zip(&tally.intra)
        .map(|(&n, &w)| if n >= 2 { w / pairs_within(n) } else { 0.0 })
        .collect()
}

fn inter_from_tally(c: &Clustering, tally: &ClusterTally) -> InterDensities {
    let sizes = c.sizes();
    let nonzero = tally
        .pairs
        .iter()
        .map(|&((i, j), w)| ((i, j), w / (sizes[i as usize] as f64 * sizes[j as usize] as f64)))
        .collect();
    InterDensities {
        cluster_count: c.cluster_count(),
        nonzero,
    }
}

/// Global density K.
pub fn global_density(g: &Graph) -> Result<f64, MetricsError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(MetricsError::TooFewVertices(n));
    }
    Ok(g.total_weight() / pairs_within(n))
}

/// Per-cluster densities κ_i and their mean K̄_intra.
pub fn intra_density(g: &Graph, c: &Clustering) -> Result<(Vec<f64>, f64), MetricsError> {
    let tally = ClusterTally::compute(g, c)?;
    let kappas = intra_from_tally(c, &tally);
    let mean = order_free_mean(&kappas);
    Ok((kappas, mean))
}

/// Pairwise densities κ_ij and their mean K̄_inter.
pub fn inter_density(g: &Graph, c: &Clustering) -> Result<(InterDensities, f64), MetricsError> {
    let tally = ClusterTally::compute(g, c)?;
    let inter = inter_from_tally(c, &tally);
    let mean = inter.mean();
    Ok((inter, mean))
}

/// The full density family from one pass over the edges.
pub fn density_report(g: &Graph, c: &Clustering) -> Result<DensityReport, MetricsError> {
    let tally = ClusterTally::compute(g, c)?;
    DensityReport::from_tally(g, c, &tally)
}

/// γ = K̄_intra − K̄_inter.
pub fn gamma(report: &DensityReport) -> f64 {
    report.mean_intra - report.mean_inter
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{two_cluster_example, two_cluster_labels};

    #[test]
    fn worked_example() {
        let g = two_cluster_example();
        let c = two_cluster_labels();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 9);
        let r = density_report(&g, &c).unwrap();
        assert!((r.global_density - 9.0 / 21.0).abs() < 1e-15);
        assert!((r.global_density - 0.4286).abs() < 1e-4);
        assert_eq!(r.intra_per_cluster[0], 1.0);
        assert!((r.intra_per_cluster[1] - 5.0 / 6.0).abs() < 1e-15);
        assert!((r.mean_intra - 0.9167).abs() < 1e-3);
        assert!((r.inter_per_pair.get(0, 1) - 1.0 / 12.0).abs() < 1e-15);
        assert!((r.mean_inter - 0.0833).abs() < 1e-3);
        assert!((gamma(&r) - 0.8333).abs() < 1e-3);
        assert!(r.inequalities_hold());
    }

    #[test]
    fn global_density_examples() {
        assert_eq!(global_density(&Graph::complete(4)).unwrap(), 1.0);
        assert_eq!(global_density(&Graph::empty(5)).unwrap(), 0.0);
        assert_eq!(
            global_density(&Graph::empty(1)).unwrap_err(),
            MetricsError::TooFewVertices(1)
        );
    }

    #[test]
    fn singleton_and_single_cluster_base_cases() {
        let g = two_cluster_example();
        let n = g.vertex_count();
        let solo = density_report(&g, &Clustering::singletons(n)).unwrap();
        assert_eq!(solo.mean_intra, 0.0);
        assert!((solo.mean_inter - solo.global_density).abs() < 1e-15);
        assert!(!solo.inequalities_hold());

        let one = density_report(&g, &Clustering::single(n)).unwrap();
        assert_eq!(one.mean_inter, 0.0);
        assert_eq!(one.inter_per_pair.pair_count(), 0);
        assert!((one.mean_intra - one.global_density).abs() < 1e-15);
        assert!(!one.inequalities_hold());
    }

    #[test]
    fn disjoint_cliques_have_no_inter_density() {
        let g = Graph::from_pairs(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let c = Clustering::new(vec![0, 0, 0, 1, 1, 1], 2).unwrap();
        let (inter, mean) = inter_density(&g, &c).unwrap();
        assert_eq!(mean, 0.0);
        assert!(inter.nonzero().is_empty());
        let (kappa, mean_intra) = intra_density(&g, &c).unwrap();
        assert_eq!(kappa, vec![1.0, 1.0]);
        assert_eq!(mean_intra, 1.0);
    }

    #[test]
    fn equal_means_give_zero_gamma() {
        let g = Graph::complete(4);
        let c = Clustering::new(vec![0, 0, 1, 1], 2).unwrap();
        let r = density_report(&g, &c).unwrap();
        assert_eq!(r.mean_intra, r.mean_inter);
        assert_eq!(gamma(&r), 0.0);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let c = Clustering::single(3);
        assert_eq!(
            density_report(&Graph::empty(4), &c).unwrap_err(),
            MetricsError::SizeMismatch { graph: 4, clustering: 3 }
        );
    }
}
