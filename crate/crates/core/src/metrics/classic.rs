use crate::sum::compensated_sum;

use super::{DensityReport, MetricsError};

/// Textbook two-sample standard error of γ from the spread of κ_i and κ_ij.
///
/// Kept for comparison with the Monte-Carlo estimate; the assessment routine
/// does not use it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicStandardError {
    pub s_gamma: f64,
    pub s2_intra: f64,
    pub s2_inter: f64,
}

pub fn classic_standard_error(report: &DensityReport) -> Result<ClassicStandardError, MetricsError> {
    let l = report.cluster_count;
    if l < 3 {
        return Err(MetricsError::TooFewClusters(l));
    }
    let pairs = report.inter_per_pair.pair_count();
    let s2_intra = compensated_sum(
        report
            .intra_per_cluster
            .iter()
            .map(|k| (k - report.mean_intra).powi(2)),
    ) / (l - 1) as f64;
    let nonzero = report.inter_per_pair.nonzero();
    let zero_pairs = (pairs - nonzero.len()) as f64;
    let s2_inter = compensated_sum(
        nonzero
            .iter()
            .map(|p| (p.1 - report.mean_inter).powi(2))
            .chain(std::iter::once(zero_pairs * report.mean_inter.powi(2))),
    ) / (pairs - 1) as f64;
    Ok(ClassicStandardError {
        s_gamma: (s2_intra / l as f64 + s2_inter / pairs as f64).sqrt(),
        s2_intra,
        s2_inter,
    })
}
