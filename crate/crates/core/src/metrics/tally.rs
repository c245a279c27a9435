use std::collections::HashMap;

use crate::graph::{Clustering, Graph};
use crate::par;
use crate::sum::CompensatedSum;

use super::MetricsError;

/// Dense pair bins are used up to this many cluster pairs (ℓ ≈ 362).
const DENSE_PAIR_LIMIT: usize = 1 << 16;
const MIN_EDGE_BLOCK: usize = 1 << 16;
const MAX_EDGE_BLOCKS: usize = 64;

/// Index of pair `i < j` in row-major upper-triangular order.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize, l: usize) -> usize {
    debug_assert!(i < j && j < l);
    i * (2 * l - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub(crate) fn pair_from_index(mut idx: usize, l: usize) -> (usize, usize) {
    let mut i = 0;
    loop {
        let row = l - i - 1;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
        i += 1;
    }
}

enum PairBins {
    Dense(Vec<CompensatedSum>),
    Sparse(HashMap<usize, CompensatedSum>),
}

impl PairBins {
    fn new(pairs: usize) -> Self {
        if pairs <= DENSE_PAIR_LIMIT {
            PairBins::Dense(vec![CompensatedSum::default(); pairs])
        } else {
            PairBins::Sparse(HashMap::new())
        }
    }

    #[inline]
    fn add(&mut self, idx: usize, w: f64) {
        match self {
            PairBins::Dense(v) => v[idx].add(w),
            PairBins::Sparse(m) => m.entry(idx).or_default().add(w),
        }
    }

    fn merge(&mut self, other: &PairBins) {
        match (self, other) {
            (PairBins::Dense(a), PairBins::Dense(b)) => {
                a.iter_mut().zip(b).for_each(|(x, y)| x.merge(y));
            }
            (PairBins::Sparse(a), PairBins::Sparse(b)) => {
                for (k, v) in b {
                    a.entry(*k).or_default().merge(v);
                }
            }
            _ => unreachable!("pair bins share a layout"),
        }
    }

    /// Non-zero bins sorted by pair index.
    fn into_sorted(self) -> Vec<(usize, f64)> {
        match self {
            PairBins::Dense(v) => v
                .into_iter()
                .enumerate()
                .map(|(i, s)| (i, s.value()))
                .filter(|&(_, w)| w != 0.0)
                .collect(),
            PairBins::Sparse(m) => {
                let mut out: Vec<_> = m
                    .into_iter()
                    .map(|(i, s)| (i, s.value()))
                    .filter(|&(_, w)| w != 0.0)
                    .collect();
                out.sort_unstable_by_key(|p| p.0);
                out
            }
        }
    }
}

struct BlockTally {
    intra: Vec<CompensatedSum>,
    boundary: Vec<CompensatedSum>,
    pairs: PairBins,
}

/// Edge weight totals binned by cluster and by cluster pair.
///
/// One pass over the edges, sharded into fixed blocks whose boundaries depend
/// only on the edge count. Blocks are merged in order, so the totals are the
/// same for any number of workers.
#[derive(Debug, Clone)]
pub struct ClusterTally {
    /// Weight of edges with both endpoints in cluster `i`.
    pub intra: Vec<f64>,
    /// Weight of edges with exactly one endpoint in cluster `i`.
    pub boundary: Vec<f64>,
    /// Non-zero inter-cluster weights keyed by `(i, j)`, `i < j`, sorted.
    pub pairs: Vec<((u32, u32), f64)>,
    pub total_weight: f64,
}

impl ClusterTally {
    pub fn compute(g: &Graph, c: &Clustering) -> Result<Self, MetricsError> {
        if g.vertex_count() != c.vertex_count() {
            return Err(MetricsError::SizeMismatch {
                graph: g.vertex_count(),
                clustering: c.vertex_count(),
            });
        }
        let l = c.cluster_count();
        let pair_count = l * (l - 1) / 2;
        let m = g.edge_count();
        let block = MIN_EDGE_BLOCK.max(m.div_ceil(MAX_EDGE_BLOCKS));
        let edges = g.edges();
        let labels = c.labels();

        let blocks = par::map_blocks(m, block, |range| {
            let mut t = BlockTally {
                intra: vec![CompensatedSum::default(); l],
                boundary: vec![CompensatedSum::default(); l],
                pairs: PairBins::new(pair_count),
            };
            for e in range {
                let (u, v) = edges[e];
                let w = g.weight_at(e);
                let (a, b) = (labels[u as usize] as usize, labels[v as usize] as usize);
                if a == b {
                    t.intra[a].add(w);
                } else {
                    t.boundary[a].add(w);
                    t.boundary[b].add(w);
                    let (i, j) = if a < b { (a, b) } else { (b, a) };
                    t.pairs.add(pair_index(i, j, l), w);
                }
            }
            t
        });

        let mut intra = vec![CompensatedSum::default(); l];
        let mut boundary = vec![CompensatedSum::default(); l];
        let mut pairs = PairBins::new(pair_count);
        for b in &blocks {
            intra.iter_mut().zip(&b.intra).for_each(|(x, y)| x.merge(y));
            boundary.iter_mut().zip(&b.boundary).for_each(|(x, y)| x.merge(y));
            pairs.merge(&b.pairs);
        }
        drop(blocks);

        let pairs = pairs
            .into_sorted()
            .into_iter()
            .map(|(idx, w)| {
                let (i, j) = pair_from_index(idx, l);
                ((i as u32, j as u32), w)
            })
            .collect();
        Ok(Self {
            intra: intra.iter().map(CompensatedSum::value).collect(),
            boundary: boundary.iter().map(CompensatedSum::value).collect(),
            pairs,
            total_weight: g.total_weight(),
        })
    }

    /// Degree (weight) volume of cluster `i`.
    pub fn volume(&self, i: usize) -> f64 {
        2.0 * self.intra[i] + self.boundary[i]
    }
}
