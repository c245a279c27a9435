//! Synthetic graphs and labelings: Erdős–Rényi, connected caveman, planted
//! partition, and uniform random clusterings.
//!
//! Pair sampling walks each row `u` of the upper triangle with geometric
//! skips, so cost is proportional to the number of edges produced rather than
//! the `N(N−1)/2` candidate pairs. Row `u` draws from stream `(seed, u)`; the
//! output is identical for any number of workers.

use rand::Rng;
use thiserror::Error;

use crate::graph::{Clustering, Graph};
use crate::par;
use crate::rng::{self, StreamRng};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SynthError {
    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("cannot split {vertices} vertices into {clusters} non-empty clusters")]
    InvalidClusterCount { clusters: usize, vertices: usize },
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
}

fn check_probability(p: f64) -> Result<(), SynthError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(SynthError::InvalidProbability(p))
    }
}

/// Appends every index in `lo..hi` independently with probability `p`.
fn sample_range(rng: &mut StreamRng, lo: usize, hi: usize, p: f64, out: &mut Vec<u32>) {
    if p <= 0.0 || lo >= hi {
        return;
    }
    if p >= 1.0 {
        out.extend(lo as u32..hi as u32);
        return;
    }
    let log_q = (-p).ln_1p();
    let mut pos = lo;
    loop {
        let r: f64 = rng.random();
        let skip = ((-r).ln_1p() / log_q).floor();
        if skip >= (hi - pos) as f64 {
            return;
        }
        pos += skip as usize;
        out.push(pos as u32);
        pos += 1;
        if pos >= hi {
            return;
        }
    }
}

const ROW_BLOCK: usize = 64;

/// Builds canonical edges row by row. `row_segments(u)` lists the
/// `(lo, hi, p)` column ranges of row `u`, all above the diagonal and in
/// increasing order.
fn sample_rows<F>(n: usize, seed: u64, row_segments: F) -> Vec<(u32, u32)>
where
    F: Fn(usize) -> [(usize, usize, f64); 2] + Sync + Send,
{
    let blocks = par::map_blocks(n, ROW_BLOCK, |rows| {
        let mut edges = Vec::new();
        let mut cols = Vec::new();
        for u in rows {
            let mut rng = rng::stream(seed, u as u64);
            cols.clear();
            for (lo, hi, p) in row_segments(u) {
                sample_range(&mut rng, lo, hi, p, &mut cols);
            }
            edges.extend(cols.iter().map(|&v| (u as u32, v)));
        }
        edges
    });
    let total = blocks.iter().map(Vec::len).sum();
    let mut edges = Vec::with_capacity(total);
    for b in blocks {
        edges.extend(b);
    }
    edges
}

/// G(n, p): every pair present independently with probability `p`.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, SynthError> {
    check_probability(p)?;
    if n < 2 {
        return Err(SynthError::TooFewVertices(n));
    }
    let edges = sample_rows(n, seed, |u| [(u + 1, n, p), (n, n, 0.0)]);
    Ok(Graph::from_canonical(n, edges, None))
}

/// Ring of `num_cliques` cliques of `clique_size` vertices. In each clique one
/// uniformly chosen edge is removed and replaced by an edge from one of its
/// endpoints to a uniformly chosen vertex of the next clique.
pub fn gen_connected_caveman(
    num_cliques: usize,
    clique_size: usize,
    seed: u64,
) -> Result<(Graph, Clustering), SynthError> {
    if num_cliques < 2 || clique_size < 3 {
        return Err(SynthError::InvalidShape(format!(
            "connected caveman needs at least 2 cliques of at least 3 vertices, got {num_cliques} x {clique_size}"
        )));
    }
    let (k, v) = (num_cliques, clique_size);
    let n = k * v;
    let mut rng = rng::stream(seed, 0);
    let mut removed = Vec::with_capacity(k);
    let mut added: Vec<(usize, usize)> = Vec::with_capacity(k);
    for c in 0..k {
        let base = c * v;
        let a = rng.random_range(0..v);
        let mut b = rng.random_range(0..v - 1);
        if b >= a {
            b += 1;
        }
        removed.push((base + a.min(b), base + a.max(b)));
        let from = base + if rng.random_bool(0.5) { a } else { b };
        let next = ((c + 1) % k) * v;
        loop {
            let to = next + rng.random_range(0..v);
            let e = (from.min(to), from.max(to));
            if !added.contains(&e) {
                added.push(e);
                break;
            }
        }
    }
    removed.sort_unstable();
    let mut pairs = Vec::with_capacity(k * (v * (v - 1) / 2));
    for c in 0..k {
        let base = c * v;
        for a in base..base + v {
            for b in a + 1..base + v {
                if removed.binary_search(&(a, b)).is_err() {
                    pairs.push((a, b));
                }
            }
        }
    }
    pairs.extend(added);
    let g = Graph::from_pairs(n, pairs).expect("caveman edges are distinct");
    let c = Clustering::from_parts((0..n).map(|x| (x / v) as u32).collect(), vec![v; k]);
    Ok((g, c))
}

/// Planted partition with independent intra- and inter-cluster probabilities.
///
/// In weighted mode each edge carries its generating probability as weight;
/// the topology is the same as the unweighted graph for the same seed.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedPartitionSpec {
    pub cluster_sizes: Vec<usize>,
    pub p_intra: f64,
    pub p_inter: f64,
    pub weighted: bool,
    pub seed: u64,
}

impl PlantedPartitionSpec {
    pub fn vertex_count(&self) -> usize {
        self.cluster_sizes.iter().sum()
    }

    /// Expected number of edges.
    pub fn expected_edges(&self) -> f64 {
        let n = self.vertex_count() as f64;
        let intra: f64 = self
            .cluster_sizes
            .iter()
            .map(|&s| s as f64 * (s as f64 - 1.0) / 2.0)
            .sum();
        self.p_intra * intra + self.p_inter * (n * (n - 1.0) / 2.0 - intra)
    }

    pub fn validate(&self) -> Result<(), SynthError> {
        check_probability(self.p_intra)?;
        check_probability(self.p_inter)?;
        if self.cluster_sizes.contains(&0) {
            return Err(SynthError::InvalidShape("cluster sizes must be positive".into()));
        }
        if self.vertex_count() < 2 {
            return Err(SynthError::TooFewVertices(self.vertex_count()));
        }
        Ok(())
    }

    /// `key=value` lines describing the spec.
    pub fn metadata(&self) -> String {
        let sizes: Vec<String> = self.cluster_sizes.iter().map(ToString::to_string).collect();
        format!(
            "generator=planted_partition\nvertices={}\nclusters={}\np_intra={}\np_inter={}\nweighted={}\nseed={}\ncluster_sizes={}\n",
            self.vertex_count(),
            self.cluster_sizes.len(),
            self.p_intra,
            self.p_inter,
            self.weighted,
            self.seed,
            sizes.join(",")
        )
    }
}

pub fn gen_planted_partition(spec: &PlantedPartitionSpec) -> Result<(Graph, Clustering), SynthError> {
    spec.validate()?;
    let n = spec.vertex_count();
    let mut labels = Vec::with_capacity(n);
    let mut ends = Vec::with_capacity(n);
    let mut start = 0;
    for (c, &s) in spec.cluster_sizes.iter().enumerate() {
        labels.extend(std::iter::repeat_n(c as u32, s));
        ends.extend(std::iter::repeat_n(start + s, s));
        start += s;
    }
    let (pi, po) = (spec.p_intra, spec.p_inter);
    let edges = sample_rows(n, spec.seed, |u| [(u + 1, ends[u], pi), (ends[u], n, po)]);
    let weights = spec.weighted.then(|| {
        edges
            .iter()
            .map(|&(u, v)| if labels[u as usize] == labels[v as usize] { pi } else { po })
            .collect()
    });
    let g = Graph::from_canonical(n, edges, weights);
    Ok((g, Clustering::from_parts(labels, spec.cluster_sizes.clone())))
}

/// `count` sizes drawn uniformly from the integers `min..=max`.
pub fn draw_cluster_sizes(count: usize, min: usize, max: usize, seed: u64) -> Vec<usize> {
    let mut rng = rng::stream(seed, 0);
    (0..count).map(|_| rng.random_range(min..=max)).collect()
}

const REJECTION_TRIES: usize = 64;

/// Uniform iid labels over `cluster_count` clusters, redrawn until every
/// cluster is used. When rejection keeps failing (ℓ close to n), a random set
/// of ℓ vertices is given one distinct label each and the rest stay iid.
pub fn random_labels(
    n: usize,
    cluster_count: usize,
    rng: &mut StreamRng,
) -> Result<Clustering, SynthError> {
    if cluster_count < 2 || cluster_count > n {
        return Err(SynthError::InvalidClusterCount {
            clusters: cluster_count,
            vertices: n,
        });
    }
    let mut labels = vec![0u32; n];
    let mut sizes = vec![0usize; cluster_count];
    for _ in 0..REJECTION_TRIES {
        sizes.iter_mut().for_each(|s| *s = 0);
        for l in labels.iter_mut() {
            *l = rng.random_range(0..cluster_count as u32);
            sizes[*l as usize] += 1;
        }
        if !sizes.contains(&0) {
            return Ok(Clustering::from_parts(labels, sizes));
        }
    }
    // partial Fisher-Yates: the first ℓ slots of `order` are distinct vertices
    let mut order: Vec<usize> = (0..n).collect();
    for i in 0..cluster_count {
        let j = rng.random_range(i..n);
        order.swap(i, j);
    }
    for (c, &v) in order[..cluster_count].iter().enumerate() {
        sizes[labels[v] as usize] -= 1;
        labels[v] = c as u32;
        sizes[c] += 1;
    }
    Ok(Clustering::from_parts(labels, sizes))
}

pub fn random_clustering(n: usize, cluster_count: usize, seed: u64) -> Result<Clustering, SynthError> {
    random_labels(n, cluster_count, &mut rng::stream(seed, 0))
}
