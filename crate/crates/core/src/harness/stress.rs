use std::fmt;
use std::str::FromStr;

use crate::metrics::{evaluate, QualityReport};
use crate::rng::derive_seed;
use crate::synth::{draw_cluster_sizes, gen_planted_partition, PlantedPartitionSpec};

use super::reference::published_cell;
use super::HarnessError;

pub const DEFAULT_STEPS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
pub const STRESS_CLUSTERS: usize = 200;
/// Cluster sizes are drawn uniformly from this inclusive range.
pub const SIZE_RANGE: (usize, usize) = (2, 100);
/// Size range of reduced-scale runs. With few clusters, the tiny clusters of
/// [`SIZE_RANGE`] would dominate the noise of K̄_intra.
pub const SCALED_SIZE_RANGE: (usize, usize) = (30, 70);
/// Per-cell tolerance at full scale.
pub const STRESS_TOLERANCE: f64 = 0.01;
/// Per-cell tolerance for reduced-scale runs.
pub const SCALED_TOLERANCE: f64 = 0.03;

/// Which probability is swept; the other one is held at 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StressAxis {
    IntraVariesInter0,
    InterVariesIntra0,
    IntraVariesInter100,
    InterVariesIntra100,
}

impl StressAxis {
    pub const ALL: [StressAxis; 4] = [
        StressAxis::IntraVariesInter0,
        StressAxis::InterVariesIntra0,
        StressAxis::IntraVariesInter100,
        StressAxis::InterVariesIntra100,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StressAxis::IntraVariesInter0 => "intra_varies_inter0",
            StressAxis::InterVariesIntra0 => "inter_varies_intra0",
            StressAxis::IntraVariesInter100 => "intra_varies_inter100",
            StressAxis::InterVariesIntra100 => "inter_varies_intra100",
        }
    }

    /// Number of the published table this axis reproduces.
    pub fn table(self) -> u8 {
        match self {
            StressAxis::IntraVariesInter0 => 2,
            StressAxis::InterVariesIntra0 => 3,
            StressAxis::IntraVariesInter100 => 4,
            StressAxis::InterVariesIntra100 => 5,
        }
    }

    /// `(p_intra, p_inter)` at a grid step.
    pub fn probabilities(self, step: f64) -> (f64, f64) {
        match self {
            StressAxis::IntraVariesInter0 => (step, 0.0),
            StressAxis::InterVariesIntra0 => (0.0, step),
            StressAxis::IntraVariesInter100 => (step, 1.0),
            StressAxis::InterVariesIntra100 => (1.0, step),
        }
    }
}

impl fmt::Display for StressAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StressAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let table = s.strip_prefix("table").unwrap_or(s);
        StressAxis::ALL
            .into_iter()
            .find(|a| a.name() == s || a.table().to_string() == table)
            .ok_or_else(|| {
                let names: Vec<_> = StressAxis::ALL.iter().map(|a| a.name()).collect();
                format!("unknown axis `{s}`, expected 2 to 5 or one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StressScenario {
    pub axis: StressAxis,
    pub steps: Vec<f64>,
    pub weighted: bool,
    pub clusters: usize,
    pub min_size: usize,
    pub max_size: usize,
    pub seed: u64,
}

impl StressScenario {
    pub fn new(axis: StressAxis, weighted: bool, seed: u64) -> Self {
        Self {
            axis,
            steps: DEFAULT_STEPS.to_vec(),
            weighted,
            clusters: STRESS_CLUSTERS,
            min_size: SIZE_RANGE.0,
            max_size: SIZE_RANGE.1,
            seed,
        }
    }

    /// Scales the cluster count. Below full scale the sizes switch to
    /// [`SCALED_SIZE_RANGE`], which keeps the mean size (and so N scales
    /// with the cluster count).
    pub fn scaled(mut self, scale: f64) -> Self {
        self.clusters = ((STRESS_CLUSTERS as f64 * scale).round() as usize).max(2);
        if self.clusters != STRESS_CLUSTERS {
            (self.min_size, self.max_size) = SCALED_SIZE_RANGE;
        }
        self
    }

    pub fn is_full_scale(&self) -> bool {
        self.clusters == STRESS_CLUSTERS && (self.min_size, self.max_size) == SIZE_RANGE
    }

    pub fn tolerance(&self) -> f64 {
        if self.is_full_scale() {
            STRESS_TOLERANCE
        } else {
            SCALED_TOLERANCE
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::InvalidScenario(m.to_string()));
        if self.steps.is_empty() {
            return bad("no steps");
        }
        if self.steps.iter().any(|s| !(0.0..=1.0).contains(s)) {
            return bad("steps must lie in [0, 1]");
        }
        if self.steps.windows(2).any(|w| w[0] >= w[1]) {
            return bad("steps must be strictly increasing");
        }
        if self.clusters < 2 {
            return bad("need at least 2 clusters");
        }
        if self.min_size == 0 || self.min_size > self.max_size {
            return bad("cluster size range must satisfy 1 <= min <= max");
        }
        Ok(())
    }

    /// Planted-partition spec of one cell.
    ///
    /// Sizes depend only on `p_intra` and the topology only on
    /// `(p_intra, p_inter)`, so cells shared between tables (and the
    /// weighted and unweighted variants of a cell) are the same graph.
    pub fn cell_spec(&self, step: f64) -> PlantedPartitionSpec {
        let (p_intra, p_inter) = self.axis.probabilities(step);
        let size_seed = derive_seed(self.seed, p_intra.to_bits());
        PlantedPartitionSpec {
            cluster_sizes: draw_cluster_sizes(self.clusters, self.min_size, self.max_size, size_seed),
            p_intra,
            p_inter,
            weighted: self.weighted,
            seed: derive_seed(size_seed, p_inter.to_bits()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StressRow {
    pub step: f64,
    pub p_intra: f64,
    pub p_inter: f64,
    pub cluster_sizes: Vec<usize>,
    pub total_weight: f64,
    pub report: QualityReport,
}

impl StressRow {
    pub fn csv_row(&self) -> String {
        self.report.csv_row()
    }
}

/// Generates and measures one graph per step. Cells run one after another
/// so at most one large graph is resident; each cell is parallel inside.
pub fn run_stress(scenario: &StressScenario) -> Result<Vec<StressRow>, HarnessError> {
    scenario.validate()?;
    scenario
        .steps
        .iter()
        .map(|&step| {
            let spec = scenario.cell_spec(step);
            log::info!(
                "{} step {step}: N = {}, expected edges {:.0}",
                scenario.axis,
                spec.vertex_count(),
                spec.expected_edges()
            );
            let (g, c) = gen_planted_partition(&spec)?;
            let report = evaluate(&g, &c)?;
            Ok(StressRow {
                step,
                p_intra: spec.p_intra,
                p_inter: spec.p_inter,
                total_weight: g.total_weight(),
                cluster_sizes: spec.cluster_sizes,
                report,
            })
        })
        .collect()
}

/// Expected-value prediction of a planted-partition cell from its sizes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedCell {
    pub k_intra: f64,
    pub k_inter: f64,
    pub q: Option<f64>,
    pub phi: Option<f64>,
}

/// Replaces every edge count by its expectation: intra weight
/// `p·w·n(n−1)/2`, boundary weight `p'·w'·n(N−n)`, where `w = p` in
/// weighted mode and 1 otherwise.
pub fn expected_cell(sizes: &[usize], p_intra: f64, p_inter: f64, weighted: bool) -> ExpectedCell {
    let (wi, wo) = if weighted { (p_intra, p_inter) } else { (1.0, 1.0) };
    let n_total: f64 = sizes.iter().map(|&n| n as f64).sum();
    let intra: Vec<f64> = sizes
        .iter()
        .map(|&n| p_intra * wi * n as f64 * (n as f64 - 1.0) / 2.0)
        .collect();
    let boundary: Vec<f64> = sizes
        .iter()
        .map(|&n| p_inter * wo * n as f64 * (n_total - n as f64))
        .collect();
    let total = intra.iter().sum::<f64>() + boundary.iter().sum::<f64>() / 2.0;
    let (q, phi) = if total > 0.0 {
        let mut q = 0.0;
        let mut phi: Option<f64> = None;
        for (a, b) in intra.iter().zip(&boundary) {
            let vol = 2.0 * a + b;
            q += a / total - (vol / (2.0 * total)).powi(2);
            let den = vol.min(2.0 * total - vol);
            if den > 0.0 {
                let f = b / den;
                phi = Some(phi.map_or(f, |m| m.min(f)));
            }
        }
        (Some(q), phi)
    } else {
        (None, None)
    };
    // clusters with fewer than two vertices have κ_i = 0
    let paired = sizes.iter().filter(|&&n| n >= 2).count() as f64 / sizes.len() as f64;
    ExpectedCell {
        k_intra: p_intra * wi * paired,
        k_inter: p_inter * wo,
        q,
        phi,
    }
}

/// One measured-vs-target comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct CellCheck {
    pub metric: &'static str,
    pub step: f64,
    pub measured: f64,
    /// `NaN` when the value is expected to be undefined.
    pub target: f64,
    pub tolerance: f64,
    /// Where the target comes from: `published` or `expected`.
    pub source: &'static str,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        match (self.measured.is_nan(), self.target.is_nan()) {
            (true, true) => true,
            (false, false) => (self.measured - self.target).abs() <= self.tolerance,
            _ => false,
        }
    }
}

impl fmt::Display for CellCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {:<4} {:<7} measured {:>8.4} target {:>8.4} ({}, ±{}) {}",
            self.step,
            self.metric,
            self.measured,
            self.target,
            self.source,
            self.tolerance,
            if self.passed() { "ok" } else { "MISS" }
        )
    }
}

/// Compares a row against its targets. Densities are compared with the
/// generating probability (squared in weighted mode). Q and Φ are compared
/// with the published cell at full scale and with [`expected_cell`]
/// otherwise.
pub fn check_row(scenario: &StressScenario, row: &StressRow) -> Vec<CellCheck> {
    let tol = scenario.tolerance();
    let d = &row.report.density;
    let expected = expected_cell(&row.cluster_sizes, row.p_intra, row.p_inter, scenario.weighted);
    let published = scenario
        .is_full_scale()
        .then(|| published_cell(scenario.axis, scenario.weighted, row.step))
        .flatten();
    let (q_target, phi_target, source) = match published {
        Some(p) => (p.q, p.phi, "published"),
        None => (
            expected.q.unwrap_or(f64::NAN),
            expected.phi.unwrap_or(f64::NAN),
            "expected",
        ),
    };
    let w = |p: f64| if scenario.weighted { p * p } else { p };
    let check = |metric, measured, target, source| CellCheck {
        metric,
        step: row.step,
        measured,
        target,
        tolerance: tol,
        source,
    };
    vec![
        check("K_intra", d.mean_intra, w(row.p_intra), "probability"),
        check("K_inter", d.mean_inter, w(row.p_inter), "probability"),
        check("Q", row.report.modularity.unwrap_or(f64::NAN), q_target, source),
        check(
            "Phi",
            row.report.conductance.graph_level.unwrap_or(f64::NAN),
            phi_target,
            source,
        ),
    ]
}
