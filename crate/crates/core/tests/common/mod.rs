//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls into the metric code under test: every quantity is
//! recomputed from a dense adjacency matrix by enumerating vertex pairs.

#![allow(dead_code, clippy::needless_range_loop, clippy::too_many_arguments)]

pub mod axioms;
pub mod exhaustive;

use kappa::{Clustering, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Metrics recomputed by brute force.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub k: f64,
    pub kappa_intra: Vec<f64>,
    pub mean_intra: f64,
    pub mean_inter: f64,
    pub q: Option<f64>,
    pub phi: Vec<Option<f64>>,
    pub phi_min: Option<f64>,
}

fn dense(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut a = vec![vec![0.0; n]; n];
    for (u, v, w) in g.weighted_edges() {
        a[u][v] = w;
        a[v][u] = w;
    }
    a
}

/// O(N²) pair enumeration straight from the definitions.
pub fn oracle(g: &Graph, c: &Clustering) -> Oracle {
    let n = g.vertex_count();
    let l = c.cluster_count();
    let a = dense(g);
    let label = |v: usize| c.label(v);

    let mut total = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            total += a[u][v];
        }
    }
    let k = total / (n * (n - 1) / 2) as f64;

    let mut kappa_intra = Vec::with_capacity(l);
    for i in 0..l {
        let members: Vec<usize> = (0..n).filter(|&v| label(v) == i).collect();
        let s = members.len();
        if s < 2 {
            kappa_intra.push(0.0);
            continue;
        }
        let mut w = 0.0;
        for (x, &u) in members.iter().enumerate() {
            for &v in &members[x + 1..] {
                w += a[u][v];
            }
        }
        kappa_intra.push(w / (s * (s - 1) / 2) as f64);
    }
    let mean_intra = kappa_intra.iter().sum::<f64>() / l as f64;

    let mut inter_sum = 0.0;
    for i in 0..l {
        for j in i + 1..l {
            let (mut w, mut ni, mut nj) = (0.0, 0usize, 0usize);
            for u in 0..n {
                if label(u) == i {
                    ni += 1;
                }
                if label(u) == j {
                    nj += 1;
                }
                for v in 0..n {
                    if label(u) == i && label(v) == j {
                        w += a[u][v];
                    }
                }
            }
            inter_sum += w / (ni * nj) as f64;
        }
    }
    let pairs = l * (l - 1) / 2;
    let mean_inter = if pairs == 0 { 0.0 } else { inter_sum / pairs as f64 };

    // Q = (1/2W) Σ_uv [A_uv − d_u d_v / 2W] δ(c_u, c_v) over ordered pairs
    let degree: Vec<f64> = a.iter().map(|row| row.iter().sum()).collect();
    let two_w: f64 = degree.iter().sum();
    let q = (two_w > 0.0).then(|| {
        let mut q = 0.0;
        for u in 0..n {
            for v in 0..n {
                if label(u) == label(v) {
                    q += a[u][v] - degree[u] * degree[v] / two_w;
                }
            }
        }
        q / two_w
    });

    let mut phi = Vec::with_capacity(l);
    for i in 0..l {
        let (mut cut, mut vol_in, mut vol_out) = (0.0, 0.0, 0.0);
        for u in 0..n {
            if label(u) == i {
                vol_in += degree[u];
                for v in 0..n {
                    if label(v) != i {
                        cut += a[u][v];
                    }
                }
            } else {
                vol_out += degree[u];
            }
        }
        let den = f64::min(vol_in, vol_out);
        phi.push((den > 0.0).then(|| cut / den));
    }
    let phi_min = phi.iter().flatten().copied().reduce(f64::min);

    Oracle {
        k,
        kappa_intra,
        mean_intra,
        mean_inter,
        q,
        phi,
        phi_min,
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with optional weights in (0, 1].
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, weighted: bool) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let w = weighted.then(|| 1.0 - rng.random::<f64>());
                edges.push((u, v, w));
            }
        }
    }
    Graph::build(n, edges).unwrap()
}

/// Uniform labels over `l` clusters with every cluster used.
pub fn random_clustering(rng: &mut ChaCha8Rng, n: usize, l: usize) -> Clustering {
    let mut labels: Vec<usize> = (0..n).map(|v| if v < l { v } else { rng.random_range(0..l) }).collect();
    labels.shuffle(rng);
    Clustering::new(labels, l).unwrap()
}

/// Unweighted instance with random density and cluster count.
pub fn random_unweighted(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, Clustering) {
    let n = rng.random_range(2..=max_n);
    let p = rng.random::<f64>();
    let g = random_graph(rng, n, p, false);
    let l = rng.random_range(1..=n);
    let c = random_clustering(rng, n, l);
    (g, c)
}

/// A mixed bag: density, weights and cluster count all vary.
pub fn random_instance(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, Clustering) {
    let n = rng.random_range(2..=max_n);
    let p = rng.random::<f64>();
    let weighted = rng.random_bool(0.5);
    let g = random_graph(rng, n, p, weighted);
    let l = rng.random_range(1..=n);
    let c = random_clustering(rng, n, l);
    (g, c)
}

fn lanczos_ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - lanczos_ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + G + 0.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, eps: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        return left + right + delta / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
}

fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(f, a, b, fa, fm, fb, whole, eps, 50)
}

/// Upper tail of Student's t by quadrature of the density over [0, |t|].
pub fn t_sf_quadrature(t: f64, df: u32) -> f64 {
    let nu = df as f64;
    let log_c = lanczos_ln_gamma((nu + 1.0) / 2.0)
        - lanczos_ln_gamma(nu / 2.0)
        - 0.5 * (nu * std::f64::consts::PI).ln();
    let density = move |x: f64| (log_c - (nu + 1.0) / 2.0 * (x * x / nu).ln_1p()).exp();
    // split [0, |t|] so the peak near 0 and the long shoulder are both resolved
    let x = t.abs();
    let mut mass = 0.0;
    let mut lo = 0.0;
    for hi in [0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0] {
        let hi = f64::min(hi, x);
        if hi > lo {
            mass += integrate(&density, lo, hi, 1e-15);
            lo = hi;
        }
    }
    if t >= 0.0 {
        0.5 - mass
    } else {
        0.5 + mass
    }
}
