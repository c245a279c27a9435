//! Exhaustive enumeration of small graphs for the oracle comparison.
//!
//! All metrics are invariant under vertex relabeling when the clustering is
//! relabeled along with the graph, so one graph per isomorphism class is
//! enough. Classes for N ≤ 7 are enumerated exactly by extending each
//! (N−1)-class with every possible neighbourhood of a new vertex and keeping
//! canonical forms (lexicographically smallest edge mask over all vertex
//! permutations). For N = 8 canonicalization over 8! permutations is skipped
//! and every extension of the 1,044 seven-vertex classes is tested directly;
//! deleting vertex 7 from any 8-vertex graph leaves a 7-vertex graph, so this
//! covers every 8-vertex class (with repeats).

use std::collections::BTreeSet;

use super::{oracle, random_clustering};
use kappa::{evaluate, Graph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

fn bit(u: usize, v: usize) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    1 << (a * 8 + b)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn edges_of(mask: u64, n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask & bit(u, v) != 0 {
                e.push((u, v));
            }
        }
    }
    e
}

fn canonical(mask: u64, n: usize, perms: &[Vec<usize>]) -> u64 {
    let edges = edges_of(mask, n);
    perms
        .iter()
        .map(|p| edges.iter().fold(0, |m, &(u, v)| m | bit(p[u], p[v])))
        .min()
        .unwrap()
}

pub fn extensions(mask: u64, n: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).map(move |nbhd| {
        (0..n)
            .filter(|&u| nbhd >> u & 1 == 1)
            .fold(mask, |m, u| m | bit(u, n))
    })
}

/// One representative per isomorphism class, for N = 1..=7.
pub fn classes_up_to_7() -> Vec<Vec<u64>> {
    let mut levels = vec![vec![0u64]];
    for n in 2..=7 {
        let perms = permutations(n);
        let next: BTreeSet<u64> = levels[n - 2]
            .iter()
            .flat_map(|&m| extensions(m, n - 1))
            .map(|m| canonical(m, n, &perms))
            .collect();
        levels.push(next.into_iter().collect());
    }
    levels
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

fn close_opt(a: Option<f64>, b: Option<f64>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => close(x, y),
        (None, None) => true,
        _ => false,
    }
}

/// Checks one (graph, random clustering) pair against the oracle.
pub fn check(mask: u64, n: usize, r: &mut ChaCha8Rng) -> Result<(), String> {
    let weighted = r.random_bool(0.5);
    let edges = edges_of(mask, n)
        .into_iter()
        .map(|(u, v)| (u, v, weighted.then(|| 1.0 - r.random::<f64>())));
    let g = Graph::build(n, edges).unwrap();
    let l = r.random_range(1..=n);
    let c = random_clustering(r, n, l);

    let got = evaluate(&g, &c).unwrap();
    let want = oracle(&g, &c);
    let d = &got.density;
    let agree = close(d.global_density, want.k)
        && d.intra_per_cluster.len() == want.kappa_intra.len()
        && d.intra_per_cluster.iter().zip(&want.kappa_intra).all(|(x, y)| close(*x, *y))
        && close(d.mean_intra, want.mean_intra)
        && close(d.mean_inter, want.mean_inter)
        && close(d.gamma, want.mean_intra - want.mean_inter)
        && close_opt(got.modularity, want.q)
        && got.conductance.per_cluster.len() == want.phi.len()
        && got.conductance.per_cluster.iter().zip(&want.phi).all(|(x, y)| close_opt(*x, *y))
        && close_opt(got.conductance.graph_level, want.phi_min);
    if agree {
        Ok(())
    } else {
        Err(format!(
            "n={n} mask={mask:#x} weighted={weighted} labels={:?}: got {got:?}, oracle {want:?}",
            c.labels()
        ))
    }
}

/// How much [`run`] covered.
#[derive(Debug, Clone, Copy)]
pub struct Coverage {
    pub graphs: usize,
    pub clusterings: usize,
}

/// Every class for N = 2..=7 (several clusterings each), then every
/// one-vertex extension of the 7-vertex classes.
pub fn run(r: &mut ChaCha8Rng) -> Result<Coverage, String> {
    let levels = classes_up_to_7();
    let mut cov = Coverage {
        graphs: 0,
        clusterings: 0,
    };
    for n in 2..=7 {
        for &mask in &levels[n - 1] {
            let reps = if n <= 5 { 8 } else { 2 };
            for _ in 0..reps {
                check(mask, n, r)?;
                cov.clusterings += 1;
            }
            cov.graphs += 1;
        }
    }
    for &mask in &levels[6] {
        for ext in extensions(mask, 7) {
            check(ext, 8, r)?;
            cov.graphs += 1;
            cov.clusterings += 1;
        }
    }
    Ok(cov)
}

