//! Undirected simple graphs with optional positive weights, cluster label
//! assignments, and the structural transforms used by the axiom checks.

use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("self-loop on vertex {u} (edge ({u}, {u}))")]
    SelfLoop { u: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has non-positive weight {weight}")]
    NonPositiveWeight { u: usize, v: usize, weight: f64 },
    #[error("edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")]
    EndpointOutOfRange { u: usize, v: usize, vertex_count: usize },
    #[error("edge ({u}, {v}) is unweighted but other edges carry weights")]
    MixedWeights { u: usize, v: usize },
    #[error("vertex count {0} exceeds the supported maximum")]
    TooManyVertices(usize),
    #[error("operation requires an unweighted graph")]
    WeightedUnsupported,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveAlpha(f64),
    #[error("clustering needs at least one cluster")]
    NoClusters,
    #[error("vertex {vertex} has label {label}, outside [0, {cluster_count})")]
    LabelOutOfRange { vertex: usize, label: usize, cluster_count: usize },
    #[error("cluster {0} has no members")]
    EmptyCluster(usize),
    #[error("label permutation is not a bijection on [0, {0})")]
    NotABijection(usize),
}

/// Compressed per-vertex sorted neighbour lists.
#[derive(Debug, Clone)]
struct Adjacency {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

/// Immutable undirected simple graph.
///
/// Edges are stored once, as `(u, v)` with `u < v`, sorted lexicographically.
/// A weighted graph carries one strictly positive weight per edge; an unweighted
/// graph treats every edge as weight 1 but is reported as unweighted.
#[derive(Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    weights: Option<Vec<f64>>,
    adjacency: OnceLock<Adjacency>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Self {
            vertex_count: self.vertex_count,
            edges: self.edges.clone(),
            weights: self.weights.clone(),
            adjacency: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges == other.edges
            && self.weights == other.weights
    }
}

impl Graph {
    /// Builds a graph from `(u, v, weight)` triples.
    ///
    /// `(u, v)` and `(v, u)` name the same edge; listing both is a duplicate.
    /// Either every edge carries a weight or none does.
    pub fn build<I>(vertex_count: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Option<f64>)>,
    {
        if vertex_count > u32::MAX as usize {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        let mut triples: Vec<(u32, u32, f64)> = Vec::new();
        let mut weighted = None;
        for (u, v, w) in edge_list {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::EndpointOutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            match (weighted, w) {
                (None, _) => weighted = Some(w.is_some()),
                (Some(true), None) | (Some(false), Some(_)) => {
                    return Err(GraphError::MixedWeights { u, v })
                }
                _ => {}
            }
            let weight = w.unwrap_or(1.0);
            if !(weight.is_finite() && weight > 0.0) {
                return Err(GraphError::NonPositiveWeight { u, v, weight });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            triples.push((a as u32, b as u32, weight));
        }
        triples.sort_unstable_by_key(|&(a, b, _)| (a, b));
        if let Some(w) = triples.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0 as usize,
                v: w[0].1 as usize,
            });
        }
        let edges = triples.iter().map(|&(a, b, _)| (a, b)).collect();
        let weights = weighted
            .unwrap_or(false)
            .then(|| triples.iter().map(|t| t.2).collect());
        Ok(Self::from_canonical(vertex_count, edges, weights))
    }

    /// Unweighted graph from `(u, v)` pairs.
    pub fn from_pairs<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(vertex_count, pairs.into_iter().map(|(u, v)| (u, v, None)))
    }

    /// Wraps edges already in canonical form: `u < v`, strictly increasing,
    /// in range, weights positive. Generators produce this directly.
    pub(crate) fn from_canonical(
        vertex_count: usize,
        edges: Vec<(u32, u32)>,
        weights: Option<Vec<f64>>,
    ) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges
            .iter()
            .all(|&(u, v)| u < v && (v as usize) < vertex_count));
        debug_assert!(weights.as_ref().is_none_or(|w| w.len() == edges.len()));
        Self {
            vertex_count,
            edges,
            weights,
            adjacency: OnceLock::new(),
        }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new(), None)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(n, edges, None)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Canonical edge list, `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// Weight of the `i`-th canonical edge (1 when unweighted).
    #[inline]
    pub fn weight_at(&self, i: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[i])
    }

    /// Sum of edge weights; the edge count when unweighted.
    pub fn total_weight(&self) -> f64 {
        match &self.weights {
            Some(w) => crate::sum::compensated_sum(w.iter().copied()),
            None => self.edges.len() as f64,
        }
    }

    /// `(u, v, weight)` for every edge, `u < v`.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u as usize, v as usize, self.weight_at(i)))
    }

    fn adjacency(&self) -> &Adjacency {
        self.adjacency.get_or_init(|| {
            let mut offsets = vec![0usize; self.vertex_count + 1];
            for &(u, v) in &self.edges {
                offsets[u as usize + 1] += 1;
                offsets[v as usize + 1] += 1;
            }
            for i in 0..self.vertex_count {
                offsets[i + 1] += offsets[i];
            }
            let mut cursor = offsets.clone();
            let mut neighbors = vec![0u32; 2 * self.edges.len()];
            for &(u, v) in &self.edges {
                neighbors[cursor[u as usize]] = v;
                cursor[u as usize] += 1;
                neighbors[cursor[v as usize]] = u;
                cursor[v as usize] += 1;
            }
            for i in 0..self.vertex_count {
                neighbors[offsets[i]..offsets[i + 1]].sort_unstable();
            }
            Adjacency { offsets, neighbors }
        })
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        let adj = self.adjacency();
        &adj.neighbors[adj.offsets[v]..adj.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !std::mem::replace(&mut seen[w as usize], true) {
                    reached += 1;
                    stack.push(w as usize);
                }
            }
        }
        reached == self.vertex_count
    }

    /// The graph with every non-edge made an edge and vice versa.
    pub fn complement(&self) -> Result<Graph, GraphError> {
        if self.is_weighted() {
            return Err(GraphError::WeightedUnsupported);
        }
        let n = self.vertex_count;
        let mut edges = Vec::with_capacity((n * n.saturating_sub(1) / 2).saturating_sub(self.edges.len()));
        let mut present = self.edges.iter().peekable();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if present.peek() == Some(&&(u, v)) {
                    present.next();
                } else {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph::from_canonical(n, edges, None))
    }

    /// Multiplies every weight by `alpha`. An unweighted graph becomes weighted
    /// with all weights equal to `alpha`.
    pub fn scale_weights(&self, alpha: f64) -> Result<Graph, GraphError> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(GraphError::NonPositiveAlpha(alpha));
        }
        let weights = match &self.weights {
            Some(w) => w.iter().map(|x| x * alpha).collect(),
            None => vec![alpha; self.edges.len()],
        };
        Ok(Graph::from_canonical(self.vertex_count, self.edges.clone(), Some(weights)))
    }

    /// Same topology with the weights discarded.
    pub fn without_weights(&self) -> Graph {
        Graph::from_canonical(self.vertex_count, self.edges.clone(), None)
    }
}

/// Assignment of every vertex to one of `cluster_count` non-empty clusters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    labels: Vec<u32>,
    sizes: Vec<usize>,
}

impl Clustering {
    /// Every label must lie in `[0, cluster_count)` and every cluster must be used.
    pub fn new(labels: Vec<usize>, cluster_count: usize) -> Result<Self, GraphError> {
        if cluster_count == 0 {
            return Err(GraphError::NoClusters);
        }
        let mut sizes = vec![0usize; cluster_count];
        for (vertex, &label) in labels.iter().enumerate() {
            if label >= cluster_count {
                return Err(GraphError::LabelOutOfRange {
                    vertex,
                    label,
                    cluster_count,
                });
            }
            sizes[label] += 1;
        }
        if let Some(empty) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::EmptyCluster(empty));
        }
        Ok(Self {
            labels: labels.into_iter().map(|l| l as u32).collect(),
            sizes,
        })
    }

    /// Infers the cluster count as `max(label) + 1`.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self, GraphError> {
        let count = labels.iter().max().map_or(0, |&m| m + 1);
        Self::new(labels, count)
    }

    pub(crate) fn from_parts(labels: Vec<u32>, sizes: Vec<usize>) -> Self {
        debug_assert_eq!(sizes.iter().sum::<usize>(), labels.len());
        Self { labels, sizes }
    }

    /// All vertices in one cluster.
    pub fn single(n: usize) -> Self {
        Self::from_parts(vec![0; n], vec![n])
    }

    /// Every vertex in its own cluster.
    pub fn singletons(n: usize) -> Self {
        Self::from_parts((0..n as u32).collect(), vec![1; n])
    }

    pub fn cluster_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    #[inline]
    pub fn label(&self, v: usize) -> usize {
        self.labels[v] as usize
    }

    /// Cluster sizes `n_i`, indexed by cluster id.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Relabels cluster `i` as `permutation[i]`.
    pub fn permute_labels(&self, permutation: &[usize]) -> Result<Clustering, GraphError> {
        let l = self.cluster_count();
        let mut hit = vec![false; l];
        if permutation.len() != l
            || permutation
                .iter()
                .any(|&p| p >= l || std::mem::replace(&mut hit[p], true))
        {
            return Err(GraphError::NotABijection(l));
        }
        let labels = self
            .labels
            .iter()
            .map(|&c| permutation[c as usize] as u32)
            .collect();
        let mut sizes = vec![0; l];
        for (i, &s) in self.sizes.iter().enumerate() {
            sizes[permutation[i]] = s;
        }
        Ok(Self::from_parts(labels, sizes))
    }
}
