//! The axiom checks as plain functions over one seeded instance, for callers
//! that want a pass count rather than a proptest run.

use kappa::{evaluate, Clustering, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{random_instance, random_unweighted, rng};

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn permutation_invariance(seed: u64, max_n: usize) -> Result<(), String> {
    let mut r = rng(seed);
    let (g, c) = random_instance(&mut r, max_n);
    let mut perm: Vec<usize> = (0..c.cluster_count()).collect();
    perm.shuffle(&mut r);
    let a = evaluate(&g, &c).unwrap();
    let b = evaluate(&g, &c.permute_labels(&perm).unwrap()).unwrap();
    ensure(
        a.density.global_density == b.density.global_density
            && a.density.mean_intra == b.density.mean_intra
            && a.density.mean_inter == b.density.mean_inter
            && a.modularity == b.modularity
            && a.conductance.graph_level == b.conductance.graph_level,
        || format!("seed {seed}: relabeling changed the report"),
    )
}

pub fn scaling(seed: u64, max_n: usize) -> Result<(), String> {
    let mut r = rng(seed);
    let (g, c) = random_instance(&mut r, max_n);
    let alpha = 10f64.powf(r.random_range(-3.0..3.0));
    let a = evaluate(&g, &c).unwrap();
    let b = evaluate(&g.scale_weights(alpha).unwrap(), &c).unwrap();
    let rel = |x: f64, y: f64| (alpha * x - y).abs() <= 1e-12 * y.abs().max(f64::MIN_POSITIVE);
    let q_same = match (a.modularity, b.modularity) {
        (Some(x), Some(y)) => (x - y).abs() <= 1e-12,
        (x, y) => x == y,
    };
    ensure(
        rel(a.density.global_density, b.density.global_density)
            && rel(a.density.mean_intra, b.density.mean_intra)
            && rel(a.density.mean_inter, b.density.mean_inter)
            && q_same,
        || format!("seed {seed}: scaling by {alpha} broke proportionality"),
    )
}

pub fn complementarity(seed: u64, max_n: usize) -> Result<(), String> {
    let mut r = rng(seed);
    let (g, c) = random_unweighted(&mut r, max_n);
    let a = evaluate(&g, &c).unwrap().density;
    let b = evaluate(&g.complement().unwrap(), &c).unwrap().density;
    let one = |x: f64, y: f64| (x + y - 1.0).abs() <= 1e-12;
    ensure(
        one(a.global_density, b.global_density)
            && (c.sizes().iter().any(|&s| s < 2) || one(a.mean_intra, b.mean_intra))
            && (c.cluster_count() < 2 || one(a.mean_inter, b.mean_inter)),
        || format!("seed {seed}: complement identities fail"),
    )
}

pub fn perfectness(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let sizes: Vec<usize> = (0..r.random_range(2..8)).map(|_| r.random_range(2..12)).collect();
    let n = sizes.iter().sum();
    let mut labels = Vec::with_capacity(n);
    let mut pairs = Vec::new();
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        labels.extend(std::iter::repeat_n(i, s));
        pairs.extend((start..start + s).flat_map(|u| (u + 1..start + s).map(move |v| (u, v))));
        start += s;
    }
    let g = Graph::from_pairs(n, pairs).unwrap();
    let q = evaluate(&g, &Clustering::new(labels, sizes.len()).unwrap()).unwrap();
    ensure(
        q.density.mean_intra == 1.0
            && q.density.mean_inter == 0.0
            && q.density.inequalities_hold()
            && q.conductance.graph_level == Some(0.0),
        || format!("seed {seed}: cliques {sizes:?} are not perfect"),
    )
}

pub fn bounds(seed: u64, max_n: usize) -> Result<(), String> {
    let mut r = rng(seed);
    let (g, c) = random_instance(&mut r, max_n);
    let q = evaluate(&g, &c).unwrap();
    let d = &q.density;
    let unit = |x: &f64| (0.0..=1.0).contains(x);
    ensure(
        unit(&d.global_density)
            && unit(&d.mean_intra)
            && unit(&d.mean_inter)
            && q.modularity.is_none_or(|m| (-0.5..=1.0).contains(&m))
            && q.conductance.per_cluster.iter().flatten().all(unit),
        || format!("seed {seed}: value out of bounds {q:?}"),
    )
}
