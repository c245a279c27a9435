use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::graph::Graph;
use crate::rng::derive_seed;
use crate::stats::{
    gaussian_percentiles, ks_critical_value, ks_distance_normal, simulate_null, NullSample,
    PercentilePair,
};
use crate::synth::{gen_connected_caveman, gen_erdos_renyi};

use super::HarnessError;

/// The two fixed graphs of the null study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NullGraph {
    /// G(1000, 1/3).
    ErdosRenyi,
    /// Ring of 10 cliques of 100 vertices.
    Caveman,
}

impl NullGraph {
    pub const ALL: [NullGraph; 2] = [NullGraph::ErdosRenyi, NullGraph::Caveman];

    pub fn name(self) -> &'static str {
        match self {
            NullGraph::ErdosRenyi => "ER1000",
            NullGraph::Caveman => "CC1000",
        }
    }
}

impl fmt::Display for NullGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NullGraph {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "er" | "er1000" => Ok(NullGraph::ErdosRenyi),
            "cc" | "cc1000" => Ok(NullGraph::Caveman),
            _ => Err(format!("unknown null graph `{s}`, expected ER or CC")),
        }
    }
}

/// Builds the study graph. It depends only on `seed` and the kind, so all
/// configurations on one kind share it.
pub fn null_graph(kind: NullGraph, seed: u64) -> Result<Graph, HarnessError> {
    let graph_seed = derive_seed(seed, kind as u64);
    Ok(match kind {
        NullGraph::ErdosRenyi => gen_erdos_renyi(1000, 1.0 / 3.0, graph_seed)?,
        NullGraph::Caveman => gen_connected_caveman(10, 100, graph_seed)?.0,
    })
}

pub const PERCENTILE_LEVELS: [f64; 9] = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99];

/// Equal-width histogram over `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn new(values: &[f64], bins: usize) -> Self {
        let bins = bins.max(1);
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut counts = vec![0; bins];
        if values.is_empty() {
            return Self { lo: 0.0, hi: 0.0, counts };
        }
        let width = (hi - lo) / bins as f64;
        for &v in values {
            let b = if width > 0.0 { ((v - lo) / width) as usize } else { 0 };
            counts[b.min(bins - 1)] += 1;
        }
        Self { lo, hi, counts }
    }

    pub fn edges(&self) -> Vec<f64> {
        let k = self.counts.len();
        (0..=k)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / k as f64)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let edges = self.edges();
        let mut s = String::from("bin_lo,bin_hi,count\n");
        for (i, c) in self.counts.iter().enumerate() {
            let _ = writeln!(s, "{},{},{c}", edges[i], edges[i + 1]);
        }
        s
    }

    /// Bare-bones bar chart.
    pub fn to_svg(&self, title: &str) -> String {
        let (w, h, pad) = (480.0, 240.0, 24.0);
        let max = self.counts.iter().copied().max().unwrap_or(0).max(1) as f64;
        let bw = (w - 2.0 * pad) / self.counts.len() as f64;
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n\
             <text x=\"{pad}\" y=\"16\" font-size=\"12\">{title}</text>\n"
        );
        for (i, &c) in self.counts.iter().enumerate() {
            let bh = (h - 2.0 * pad) * c as f64 / max;
            let _ = writeln!(
                s,
                "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{bh:.1}\" fill=\"steelblue\"/>",
                pad + i as f64 * bw,
                h - pad - bh,
                bw - 1.0
            );
        }
        let _ = writeln!(
            s,
            "<text x=\"{pad}\" y=\"{}\" font-size=\"10\">{:.4}</text>\n\
             <text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{:.4}</text>\n</svg>",
            h - 8.0,
            self.lo,
            w - pad,
            h - 8.0,
            self.hi
        );
        s
    }
}

/// One configuration of the null study.
#[derive(Debug, Clone, PartialEq)]
pub struct NullStudy {
    pub graph: NullGraph,
    pub sample: NullSample,
    pub ks_distance: f64,
    /// KS critical value at the 1% level.
    pub ks_critical: f64,
    pub percentiles: Vec<PercentilePair>,
    pub histogram: Histogram,
}

impl NullStudy {
    /// File stem `{graph}_{l}_{r}`.
    pub fn stem(&self) -> String {
        format!("{}_{}_{}", self.graph, self.sample.cluster_count, self.sample.runs)
    }

    pub fn percentiles_csv(&self) -> String {
        let mut s = String::from("level,empirical,gaussian\n");
        for p in &self.percentiles {
            let _ = writeln!(s, "{},{},{}", p.level, p.empirical, p.gaussian);
        }
        s
    }
}

pub fn run_null_study(
    kind: NullGraph,
    clusters: usize,
    runs: usize,
    seed: u64,
) -> Result<NullStudy, HarnessError> {
    let g = null_graph(kind, seed)?;
    run_null_study_with_graph(&g, kind, clusters, runs, seed)
}

/// Like [`run_null_study`] on a graph built once by [`null_graph`].
pub fn run_null_study_with_graph(
    g: &Graph,
    kind: NullGraph,
    clusters: usize,
    runs: usize,
    seed: u64,
) -> Result<NullStudy, HarnessError> {
    let config = ((kind as u64) << 48) | ((clusters as u64) << 24) | runs as u64;
    let sample = simulate_null(g, clusters, runs, derive_seed(seed, config))?;
    let ks_distance = ks_distance_normal(&sample.gamma_draws, sample.mean, sample.std);
    let percentiles =
        gaussian_percentiles(&sample.gamma_draws, sample.mean, sample.std, &PERCENTILE_LEVELS);
    let bins = ((runs as f64).sqrt().ceil() as usize).clamp(5, 40);
    Ok(NullStudy {
        graph: kind,
        ks_distance,
        ks_critical: ks_critical_value(runs, 0.01),
        percentiles,
        histogram: Histogram::new(&sample.gamma_draws, bins),
        sample,
    })
}
