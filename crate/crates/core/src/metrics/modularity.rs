use crate::graph::{Clustering, Graph};
use crate::sum::order_free_sum;

use super::{ClusterTally, MetricsError};

/// Newman–Girvan modularity `Q = Σ_i (e_ii − a_i²)`.
///
/// `e_ii` is the fraction of edge weight inside cluster `i` (the ordered-pair
/// double sum over `2m` reduces to `intra_i / m` for a simple graph) and `a_i`
/// is the fraction of edge endpoints (degree volume) in cluster `i`.
pub fn modularity(g: &Graph, c: &Clustering) -> Result<f64, MetricsError> {
    let tally = ClusterTally::compute(g, c)?;
    from_tally(&tally)
}

pub(super) fn from_tally(tally: &ClusterTally) -> Result<f64, MetricsError> {
    let m = tally.total_weight;
    if m <= 0.0 {
        return Err(MetricsError::NoEdges);
    }
    let terms: Vec<f64> = (0..tally.intra.len())
        .map(|i| {
            let a = tally.volume(i) / (2.0 * m);
            tally.intra[i] / m - a * a
        })
        .collect();
    Ok(order_free_sum(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_multipartite(k: usize, v: usize) -> (Graph, Clustering) {
        let n = k * v;
        let labels: Vec<usize> = (0..n).map(|x| x / v).collect();
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        let g = Graph::from_pairs(n, pairs.filter(|&(a, b)| a / v != b / v)).unwrap();
        (g, Clustering::new(labels, k).unwrap())
    }

    #[test]
    fn single_cluster_is_zero() {
        let g = crate::fixtures::two_cluster_example();
        assert_eq!(modularity(&g, &Clustering::single(7)).unwrap(), 0.0);
    }

    #[test]
    fn no_edges_is_undefined() {
        let c = Clustering::new(vec![0, 1, 1], 2).unwrap();
        assert_eq!(modularity(&Graph::empty(3), &c).unwrap_err(), MetricsError::NoEdges);
    }

    #[test]
    fn complete_multipartite_gives_minus_one_over_k() {
        // e_ii = 0 and each part holds 1/k of the endpoints: Q = -k (1/k)^2.
        for (k, v) in [(2, 3), (4, 5), (5, 2)] {
            let (g, c) = complete_multipartite(k, v);
            let q = modularity(&g, &c).unwrap();
            assert!((q + 1.0 / k as f64).abs() < 1e-12, "k={k} v={v} q={q}");
        }
    }

    #[test]
    fn worked_example_matches_hand_count() {
        // intra 3 and 5 of m = 9 edges; volumes 7 and 11 of 18 endpoints.
        let g = crate::fixtures::two_cluster_example();
        let q = modularity(&g, &crate::fixtures::two_cluster_labels()).unwrap();
        let expected = 3.0 / 9.0 - (7.0f64 / 18.0).powi(2) + 5.0 / 9.0 - (11.0f64 / 18.0).powi(2);
        assert!((q - expected).abs() < 1e-15);
    }
}
