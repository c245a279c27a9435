use std::fmt::Write as _;

use crate::graph::Graph;
use crate::metrics::{density_report, fmt_value};
use crate::par;
use crate::rng;
use crate::sum::compensated_sum;
use crate::synth::random_labels;

use super::StatsError;

/// γ over `runs` uniform random labelings of a fixed graph.
#[derive(Debug, Clone, PartialEq)]
pub struct NullSample {
    pub runs: usize,
    pub cluster_count: usize,
    /// In run order.
    pub gamma_draws: Vec<f64>,
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator).
    pub std: f64,
    pub seed: u64,
}

impl NullSample {
    pub fn from_draws(gamma_draws: Vec<f64>, cluster_count: usize, seed: u64) -> Self {
        let runs = gamma_draws.len();
        let mean = compensated_sum(gamma_draws.iter().copied()) / runs as f64;
        let ss = compensated_sum(gamma_draws.iter().map(|g| (g - mean) * (g - mean)));
        let std = if runs > 1 { (ss / (runs - 1) as f64).sqrt() } else { 0.0 };
        Self {
            runs,
            cluster_count,
            gamma_draws,
            mean,
            std,
            seed,
        }
    }

    /// Degrees of freedom of the modified t-test.
    pub fn df(&self) -> usize {
        self.runs - 1
    }

    /// `run,gamma` rows followed by `mean` and `std` summary rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("run,gamma\n");
        for (i, g) in self.gamma_draws.iter().enumerate() {
            let _ = writeln!(out, "{i},{}", fmt_value(*g));
        }
        let _ = writeln!(out, "mean,{}", fmt_value(self.mean));
        let _ = writeln!(out, "std,{}", fmt_value(self.std));
        out
    }
}

/// Draws `runs` random labelings into `cluster_count` non-empty clusters and
/// records γ for each. Run `j` uses stream `(seed, j)`.
pub fn simulate_null(
    g: &Graph,
    cluster_count: usize,
    runs: usize,
    seed: u64,
) -> Result<NullSample, StatsError> {
    let n = g.vertex_count();
    if cluster_count < 2 || cluster_count > n {
        return Err(StatsError::InvalidClusterCount {
            clusters: cluster_count,
            vertices: n,
        });
    }
    if runs < 2 {
        return Err(StatsError::TooFewRuns(runs));
    }
    let draws = par::map_indices(runs, |j| -> Result<f64, StatsError> {
        let mut rng = rng::stream(seed, j as u64);
        let c = random_labels(n, cluster_count, &mut rng)?;
        Ok(density_report(g, &c)?.gamma)
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    Ok(NullSample::from_draws(draws, cluster_count, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::gen_erdos_renyi;

    #[test]
    fn empty_graph_null_is_all_zero() {
        let s = simulate_null(&Graph::empty(50), 4, 40, 1).unwrap();
        assert!(s.gamma_draws.iter().all(|&g| g == 0.0));
        assert_eq!((s.mean, s.std), (0.0, 0.0));
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = Graph::complete(5);
        assert!(matches!(simulate_null(&g, 1, 10, 0), Err(StatsError::InvalidClusterCount { .. })));
        assert!(matches!(simulate_null(&g, 6, 10, 0), Err(StatsError::InvalidClusterCount { .. })));
        assert_eq!(simulate_null(&g, 2, 1, 0).unwrap_err(), StatsError::TooFewRuns(1));
    }

    #[test]
    fn deterministic_and_schedule_independent() {
        let g = gen_erdos_renyi(120, 0.2, 3).unwrap();
        let a = simulate_null(&g, 6, 50, 9).unwrap();
        let b = par::sequential(|| simulate_null(&g, 6, 50, 9).unwrap());
        assert_eq!(a, b);
        let bits = |s: &NullSample| s.gamma_draws.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&a), bits(&b));
        assert_ne!(a.gamma_draws, simulate_null(&g, 6, 50, 10).unwrap().gamma_draws);
    }

    #[test]
    fn summary_recomputes_from_draws() {
        let s = NullSample::from_draws(vec![1.0, 2.0, 4.0], 3, 0);
        assert!((s.mean - 7.0 / 3.0).abs() < 1e-15);
        let var = ((1.0f64 - 7.0 / 3.0).powi(2) + (2.0f64 - 7.0 / 3.0).powi(2) + (4.0f64 - 7.0 / 3.0).powi(2)) / 2.0;
        assert!((s.std - var.sqrt()).abs() < 1e-15);
        assert!(s.to_csv().starts_with("run,gamma\n0,1\n1,2\n2,4\nmean,"));
    }
}
