use std::fmt::Write as _;

use crate::metrics::modularity;
use crate::rng::derive_seed;
use crate::synth::{gen_planted_partition, PlantedPartitionSpec};

use super::HarnessError;

pub const CASE_CSV_HEADER: &str = "k,v,p,Q_measured,Q_predicted,gap";

/// Measured against predicted modularity for one breakdown case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseCheck {
    pub case: u8,
    pub k: usize,
    pub v: usize,
    pub p: f64,
    /// `None` when the graph has no edges.
    pub q_measured: Option<f64>,
    pub q_predicted: Option<f64>,
}

impl CaseCheck {
    /// `Q_measured − Q_predicted`; `None` if either is undefined.
    pub fn gap(&self) -> Option<f64> {
        Some(self.q_measured? - self.q_predicted?)
    }

    pub fn csv_row(&self) -> String {
        let f = |x: Option<f64>| x.map_or_else(|| "NaN".to_string(), |v| v.to_string());
        format!(
            "{},{},{},{},{},{}",
            self.k,
            self.v,
            self.p,
            f(self.q_measured),
            f(self.q_predicted),
            f(self.gap())
        )
    }
}

/// `(p_intra, p_inter)` of a case at sweep value `p`.
fn case_probabilities(case: u8, p: f64) -> (f64, f64) {
    match case {
        1 => (p, 0.0),
        2 => (0.0, p),
        3 => (p, 1.0),
        _ => (1.0, p),
    }
}

/// Closed-form modularity of `k` equal clusters of `v` vertices with every
/// edge count at its expectation. Cases 1 and 2 reduce to `1 − 1/k` and
/// `−1/k`.
pub fn predicted_modularity(case: u8, k: usize, v: usize, p: f64) -> Option<f64> {
    let (kf, vf) = (k as f64, v as f64);
    match case {
        1 if p > 0.0 => Some(1.0 - 1.0 / kf),
        2 if p > 0.0 => Some(-1.0 / kf),
        1 | 2 => None,
        _ => {
            let (pi, po) = case_probabilities(case, p);
            let intra = pi * vf * (vf - 1.0) / 2.0;
            let boundary = po * vf * (kf - 1.0) * vf;
            let total = kf * intra + kf * boundary / 2.0;
            if total == 0.0 {
                return None;
            }
            let vol = 2.0 * intra + boundary;
            Some(kf * (intra / total - (vol / (2.0 * total)).powi(2)))
        }
    }
}

/// Builds the planted configuration of `case` (1 to 4) with `k` clusters of
/// `v` vertices and measures its modularity.
pub fn check_modularity_cases(
    k: usize,
    v: usize,
    p: f64,
    case: u8,
    seed: u64,
) -> Result<CaseCheck, HarnessError> {
    if !(1..=4).contains(&case) {
        return Err(HarnessError::InvalidScenario(format!("case must be 1 to 4, got {case}")));
    }
    if k < 2 || v < 2 {
        return Err(HarnessError::InvalidScenario(format!(
            "need k >= 2 and v >= 2, got k = {k}, v = {v}"
        )));
    }
    let (p_intra, p_inter) = case_probabilities(case, p);
    let spec = PlantedPartitionSpec {
        cluster_sizes: vec![v; k],
        p_intra,
        p_inter,
        weighted: false,
        seed: derive_seed(seed, ((case as u64) << 32) | (p * 1e6).round() as u64),
    };
    let (g, c) = gen_planted_partition(&spec)?;
    Ok(CaseCheck {
        case,
        k,
        v,
        p,
        q_measured: modularity(&g, &c).ok(),
        q_predicted: predicted_modularity(case, k, v, p),
    })
}

/// Sweeps `p` over `steps` for one case and renders the CSV.
pub fn run_cases(
    case: u8,
    k: usize,
    v: usize,
    steps: &[f64],
    seed: u64,
) -> Result<(Vec<CaseCheck>, String), HarnessError> {
    let checks = steps
        .iter()
        .map(|&p| check_modularity_cases(k, v, p, case, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let mut csv = format!("{CASE_CSV_HEADER}\n");
    for c in &checks {
        let _ = writeln!(csv, "{}", c.csv_row());
    }
    Ok((checks, csv))
}
