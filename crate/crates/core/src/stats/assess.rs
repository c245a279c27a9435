use std::fmt;

use crate::graph::{Clustering, Graph};
use crate::metrics::{density_report, fmt_opt, fmt_value, DensityReport};
use crate::rng::DEFAULT_SEED;

use super::{
    modified_t_test, simulate_null, NullSample, StatsError, TTest, DEFAULT_RUNS,
    MIN_RUNS_FOR_VERDICT,
};

/// State of the inequality chain `K̄_inter < K < K̄_intra`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Holds,
    Fails,
    /// ℓ = 1: the chain cannot hold by construction.
    SingleCluster,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Good,
    Poor,
    /// ℓ = 1: quality is judged by the global density K alone.
    SingleClusterAssessByK,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Holds => "holds",
            Condition::Fails => "fails",
            Condition::SingleCluster => "single_cluster_special_case",
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Good => "good",
            Classification::Poor => "poor",
            Classification::SingleClusterAssessByK => "single_cluster_assess_by_K",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssessConfig {
    pub runs: usize,
    pub seed: u64,
    /// Significance level for a `good` classification.
    pub alpha: f64,
}

impl Default for AssessConfig {
    fn default() -> Self {
        Self {
            runs: DEFAULT_RUNS,
            seed: DEFAULT_SEED,
            alpha: 0.05,
        }
    }
}

pub const VERDICT_CSV_HEADER: &str = "name,l,K,K_intra,K_inter,gamma,t,df,p,classification";

/// Result of the assessment routine for one clustering.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub condition: Condition,
    pub density: DensityReport,
    pub gamma_observed: f64,
    /// Present only when the condition holds and the test ran.
    pub test: Option<TTest>,
    pub null: Option<NullSample>,
    /// `runs − 1`.
    pub df: usize,
    pub classification: Classification,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn t_stat(&self) -> Option<f64> {
        self.test.map(|t| t.t)
    }

    pub fn p_value(&self) -> Option<f64> {
        self.test.map(|t| t.p_value)
    }

    pub fn csv_row(&self, name: &str) -> String {
        let d = &self.density;
        format!(
            "{name},{},{},{},{},{},{},{},{},{}",
            d.cluster_count,
            fmt_value(d.global_density),
            fmt_value(d.mean_intra),
            fmt_value(d.mean_inter),
            fmt_value(self.gamma_observed),
            fmt_opt(self.t_stat()),
            self.df,
            fmt_opt(self.p_value()),
            self.classification
        )
    }

    /// Multi-line human-readable report.
    pub fn render(&self) -> String {
        let d = &self.density;
        let mut s = format!(
            "clusters            {}\n\
             global density K    {:.4}\n\
             mean intra K_intra  {:.4}\n\
             mean inter K_inter  {:.4}\n\
             gamma               {:.4}\n\
             condition 1         {}\n",
            d.cluster_count, d.global_density, d.mean_intra, d.mean_inter, self.gamma_observed, self.condition
        );
        if let Some(null) = &self.null {
            s += &format!(
                "null runs           {}\nnull mean gamma     {:.4}\nnull std gamma      {:.4}\n",
                null.runs, null.mean, null.std
            );
        }
        if let Some(t) = &self.test {
            s += &format!("t                   {:.4}\ndf                  {}\np-value             {:.4}\n", t.t, t.df, t.p_value);
        }
        s += &format!("classification      {}\n", self.classification);
        for n in &self.notes {
            s += &format!("note: {n}\n");
        }
        s
    }
}

pub fn assess(g: &Graph, c: &Clustering, runs: usize, seed: u64) -> Result<Verdict, StatsError> {
    assess_with(
        g,
        c,
        &AssessConfig {
            runs,
            seed,
            ..AssessConfig::default()
        },
    )
}

/// Runs the assessment routine: densities, the inequality chain, and, when it
/// holds, the Monte-Carlo significance test of γ.
pub fn assess_with(g: &Graph, c: &Clustering, cfg: &AssessConfig) -> Result<Verdict, StatsError> {
    if cfg.runs < 2 {
        return Err(StatsError::TooFewRuns(cfg.runs));
    }
    let density = density_report(g, c)?;
    let gamma_observed = density.gamma;
    let df = cfg.runs - 1;
    let mut notes = Vec::new();

    if density.cluster_count == 1 {
        notes.push(format!(
            "single cluster: K_intra equals K = {:.4}; judge the clustering by global density",
            density.global_density
        ));
        return Ok(Verdict {
            condition: Condition::SingleCluster,
            density,
            gamma_observed,
            test: None,
            null: None,
            df,
            classification: Classification::SingleClusterAssessByK,
            notes,
        });
    }

    if !density.inequalities_hold() {
        if density.mean_intra <= density.global_density {
            notes.push("condition 1 fails: mean intra-cluster density is not above global density".into());
        }
        if density.mean_inter >= density.global_density {
            notes.push("condition 1 fails: mean inter-cluster density is not below global density".into());
        }
        return Ok(Verdict {
            condition: Condition::Fails,
            density,
            gamma_observed,
            test: None,
            null: None,
            df,
            classification: Classification::Poor,
            notes,
        });
    }

    if cfg.runs < MIN_RUNS_FOR_VERDICT {
        notes.push(format!(
            "only {} simulation runs; at least {} are recommended",
            cfg.runs, MIN_RUNS_FOR_VERDICT
        ));
    }
    let null = simulate_null(g, density.cluster_count, cfg.runs, cfg.seed)?;
    let test = modified_t_test(gamma_observed, &null);
    if test.underflow {
        notes.push(format!("p-value below {:e}, reported as 0", super::P_VALUE_FLOOR));
    }
    if test.degenerate {
        notes.push("null draws have zero spread; standard error is degenerate".into());
    }
    let classification = if test.p_value < cfg.alpha {
        Classification::Good
    } else {
        notes.push(format!("gamma is not significant at alpha = {}", cfg.alpha));
        Classification::Poor
    };
    Ok(Verdict {
        condition: Condition::Holds,
        density,
        gamma_observed,
        test: Some(test),
        null: Some(null),
        df,
        classification,
        notes,
    })
}

pub const COMPARISON_NOTE: &str =
    "ranking by p-value is a heuristic comparison, not a formal statistical test";

#[derive(Debug, Clone, PartialEq)]
pub struct RankedVerdict {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// Best first.
    pub ranking: Vec<RankedVerdict>,
    pub note: &'static str,
}

/// Assesses each clustering with a null of its own cluster count and ranks
/// them: those satisfying the inequality chain first by ascending p-value,
/// then the rest by descending γ. Ties keep input order.
pub fn compare(
    g: &Graph,
    clusterings: &[(String, Clustering)],
    runs: usize,
    seed: u64,
) -> Result<Comparison, StatsError> {
    if clusterings.len() < 2 {
        return Err(StatsError::TooFewClusterings(clusterings.len()));
    }
    let mut ranking = clusterings
        .iter()
        .map(|(name, c)| {
            Ok(RankedVerdict {
                name: name.clone(),
                verdict: assess(g, c, runs, seed)?,
            })
        })
        .collect::<Result<Vec<_>, StatsError>>()?;
    ranking.sort_by(|a, b| {
        let key = |r: &RankedVerdict| match r.verdict.p_value() {
            Some(p) => (0, p),
            None => (1, -r.verdict.gamma_observed),
        };
        let (ka, kb) = (key(a), key(b));
        ka.0.cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
    });
    Ok(Comparison {
        ranking,
        note: COMPARISON_NOTE,
    })
}
