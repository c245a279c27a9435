use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use log::warn;

use kappa::harness::{
    self, output, published_null, run_cases, run_stress, CellCheck, NullGraph,
    StressAxis, StressScenario, DEFAULT_STEPS, STRESS_CLUSTERS,
};
use kappa::io::{load_instance, write_edge_list, write_labels, Instance, SelfLoops};
use kappa::metrics::{evaluate, fmt_value, QUALITY_CSV_HEADER};
use kappa::stats::{
    assess_with, compare, AssessConfig, Classification, Condition, VERDICT_CSV_HEADER,
};
use kappa::synth::{
    draw_cluster_sizes, gen_connected_caveman, gen_erdos_renyi, gen_planted_partition,
    PlantedPartitionSpec,
};
use kappa::{par, Clustering, Graph};

use crate::{
    AssessArgs, Cli, Command, CompareArgs, DensityArgs, GenArgs, InputArgs, Mode, NullArgs,
    StressArgs,
};

pub const EXIT_GOOD: u8 = 0;
pub const EXIT_POOR: u8 = 2;
pub const EXIT_SINGLE_CLUSTER: u8 = 3;

/// Warn when a generator would scan more candidate pairs than this.
const PAIR_GUARD: f64 = 1e8;

pub fn run(cli: Cli) -> Result<u8> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        par::set_threads(t);
    }
    let seed = if cli.random_seed {
        let s = SystemTime::now().duration_since(UNIX_EPOCH)?.as_nanos() as u64;
        eprintln!("seed = {s}");
        s
    } else {
        cli.seed
    };
    let out = cli.out.as_deref();
    match cli.command {
        Command::Density(a) => density(&a, out),
        Command::Assess(a) => assess(&a, seed, out),
        Command::Compare(a) => compare_cmd(&a, seed, out),
        Command::Gen(a) => gen(&a, seed, out.unwrap_or(Path::new("."))),
        Command::Null(a) => null(&a, seed, out.unwrap_or(Path::new("kappa-out"))),
        Command::Stress(a) => stress(&a, seed, out.unwrap_or(Path::new("kappa-out"))),
    }
}

fn load(input: &InputArgs, labels: &[&Path]) -> Result<Instance> {
    for p in std::iter::once(input.graph.as_path()).chain(labels.iter().copied()) {
        if !p.is_file() {
            bail!("{}: no such file", p.display());
        }
    }
    let policy = if input.drop_self_loops { SelfLoops::Drop } else { SelfLoops::Reject };
    let mut inst = load_instance(&input.graph, labels, policy)?;
    if inst.graph.is_weighted() && !input.weighted {
        warn!("ignoring the weight column; pass --weighted to use it");
        inst.graph = inst.graph.without_weights();
    } else if input.weighted && !inst.graph.is_weighted() && inst.graph.edge_count() > 0 {
        bail!("--weighted given but {} has no weight column", input.graph.display());
    }
    Ok(inst)
}

fn write_file(dir: Option<&Path>, name: &str, contents: &str) -> Result<()> {
    if let Some(dir) = dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn density(a: &DensityArgs, out: Option<&Path>) -> Result<u8> {
    let inst = load(&a.input, &[&a.labels])?;
    let report = evaluate(&inst.graph, &inst.clusterings[0])?;
    let csv = format!("{QUALITY_CSV_HEADER}\n{}\n", report.csv_row());
    print!("{csv}");
    write_file(out, "density.csv", &csv)?;

    let d = &report.density;
    eprintln!("K        {:.4}", d.global_density);
    eprintln!("K_intra  {:.4}", d.mean_intra);
    eprintln!("K_inter  {:.4}", d.mean_inter);
    eprintln!("gamma    {:.4}", d.gamma);
    if d.cluster_count == 1 {
        eprintln!("single cluster: assess the clustering by its global density K");
    } else if d.inequalities_hold() {
        eprintln!("condition 1 holds");
    } else {
        eprintln!("condition 1 fails");
    }
    Ok(EXIT_GOOD)
}

fn assess(a: &AssessArgs, seed: u64, out: Option<&Path>) -> Result<u8> {
    let inst = load(&a.input, &[&a.labels])?;
    let cfg = AssessConfig {
        runs: a.runs,
        seed,
        alpha: a.alpha,
    };
    let v = assess_with(&inst.graph, &inst.clusterings[0], &cfg)?;
    let name = a.labels.display().to_string();
    let csv = format!("{VERDICT_CSV_HEADER}\n{}\n", v.csv_row(&name));
    print!("{csv}");
    eprint!("{}", v.render());
    write_file(out, "verdict.csv", &csv)?;
    if let Some(null) = &v.null {
        write_file(out, "null.csv", &null.to_csv())?;
    }
    Ok(match (v.condition, v.classification) {
        (Condition::SingleCluster, _) => EXIT_SINGLE_CLUSTER,
        (_, Classification::Good) => EXIT_GOOD,
        _ => EXIT_POOR,
    })
}

fn compare_cmd(a: &CompareArgs, seed: u64, out: Option<&Path>) -> Result<u8> {
    let paths: Vec<&Path> = a.labels.iter().map(PathBuf::as_path).collect();
    let inst = load(&a.input, &paths)?;
    let named: Vec<(String, Clustering)> = a
        .labels
        .iter()
        .map(|p| p.display().to_string())
        .zip(inst.clusterings)
        .collect();
    let cmp = compare(&inst.graph, &named, a.runs, seed)?;
    let mut csv = format!("rank,{VERDICT_CSV_HEADER}\n");
    for (i, r) in cmp.ranking.iter().enumerate() {
        csv += &format!("{},{}\n", i + 1, r.verdict.csv_row(&r.name));
        let p = r.verdict.p_value().map_or("n/a".to_string(), |p| format!("{p:.4}"));
        eprintln!(
            "{}. {}  condition 1 {}, gamma {:.4}, p {p}, {}",
            i + 1,
            r.name,
            r.verdict.condition,
            r.verdict.gamma_observed,
            r.verdict.classification
        );
    }
    eprintln!("note: {}", cmp.note);
    print!("{csv}");
    write_file(out, "comparison.csv", &csv)?;
    Ok(EXIT_GOOD)
}

fn guard_pairs(n: usize, expected_edges: f64) {
    let pairs = n as f64 * (n as f64 - 1.0) / 2.0;
    if pairs > PAIR_GUARD {
        warn!(
            "{n} vertices span {pairs:.3e} candidate pairs; expect about {expected_edges:.3e} edges \
             ({:.1} GB)",
            expected_edges * 16.0 / 1e9
        );
    }
}

fn gen(a: &GenArgs, seed: u64, dir: &Path) -> Result<u8> {
    let (g, c, meta): (Graph, Clustering, String) = if a.kind.er {
        guard_pairs(a.vertices, a.p * a.vertices as f64 * (a.vertices as f64 - 1.0) / 2.0);
        let g = gen_erdos_renyi(a.vertices, a.p, seed)?;
        let meta = format!(
            "generator=erdos_renyi\nvertices={}\np={}\nseed={seed}\n",
            a.vertices, a.p
        );
        let c = Clustering::single(a.vertices);
        (g, c, meta)
    } else if a.kind.caveman {
        let (g, c) = gen_connected_caveman(a.cliques, a.clique_size, seed)?;
        let meta = format!(
            "generator=connected_caveman\ncliques={}\nclique_size={}\nseed={seed}\n",
            a.cliques, a.clique_size
        );
        (g, c, meta)
    } else {
        let cluster_sizes = match &a.sizes {
            Some(s) => s.clone(),
            None => {
                if a.min_size == 0 || a.min_size > a.max_size {
                    bail!("cluster size range must satisfy 1 <= min <= max");
                }
                draw_cluster_sizes(a.clusters, a.min_size, a.max_size, seed)
            }
        };
        let spec = PlantedPartitionSpec {
            cluster_sizes,
            p_intra: a.p_intra,
            p_inter: a.p_inter,
            weighted: a.weighted,
            seed,
        };
        spec.validate()?;
        guard_pairs(spec.vertex_count(), spec.expected_edges());
        let (g, c) = gen_planted_partition(&spec)?;
        (g, c, spec.metadata())
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let edges = dir.join(format!("{}.edges", a.name));
    let labels = dir.join(format!("{}.labels", a.name));
    let meta_path = dir.join(format!("{}.meta", a.name));
    write_edge_list(&g, fs::File::create(&edges)?).with_context(|| edges.display().to_string())?;
    write_labels(&c, fs::File::create(&labels)?).with_context(|| labels.display().to_string())?;
    fs::write(&meta_path, meta).with_context(|| meta_path.display().to_string())?;
    let mut stdout = std::io::stdout().lock();
    for p in [&edges, &labels, &meta_path] {
        writeln!(stdout, "{}", p.display())?;
    }
    eprintln!(
        "{} vertices, {} edges, {} clusters",
        g.vertex_count(),
        g.edge_count(),
        c.cluster_count()
    );
    Ok(EXIT_GOOD)
}

fn null(a: &NullArgs, seed: u64, dir: &Path) -> Result<u8> {
    let graphs = if a.graphs.is_empty() { NullGraph::ALL.to_vec() } else { a.graphs.clone() };
    println!("graph,l,r,mean,std,ks,ks_critical_1pct,published_mean,published_std");
    for kind in graphs {
        let g = harness::null_graph(kind, seed)?;
        eprintln!("{kind}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
        for &l in &a.clusters {
            for &r in &a.runs {
                let study = harness::run_null_study_with_graph(&g, kind, l, r, seed)?;
                output::write_null_study(dir, &study, a.svg)?;
                let (pm, ps) = published_null(kind, l, r)
                    .map_or(("NaN".into(), "NaN".into()), |p| (p.mean.to_string(), p.std.to_string()));
                println!(
                    "{kind},{l},{r},{},{},{},{},{pm},{ps}",
                    fmt_value(study.sample.mean),
                    fmt_value(study.sample.std),
                    fmt_value(study.ks_distance),
                    fmt_value(study.ks_critical)
                );
            }
        }
    }
    eprintln!("wrote {}", dir.join("null").display());
    Ok(EXIT_GOOD)
}

fn stress(a: &StressArgs, seed: u64, dir: &Path) -> Result<u8> {
    if !(a.scale > 0.0 && a.scale <= 1.0) {
        bail!("--scale must lie in (0, 1]");
    }
    let axes = a.axis.map_or(StressAxis::ALL.to_vec(), |x| vec![x]);
    let modes: &[bool] = match a.mode {
        Mode::Both => &[false, true],
        Mode::Unweighted => &[false],
        Mode::Weighted => &[true],
    };
    let (mut total, mut missed) = (0, 0);
    for &axis in &axes {
        for &weighted in modes {
            let scenario = StressScenario::new(axis, weighted, seed).scaled(a.scale);
            let rows = run_stress(&scenario)?;
            let path = output::write_stress_table(dir, &scenario, &rows)?;
            print!("{}", fs::read_to_string(&path)?);
            eprintln!("wrote {}", path.display());
            for row in &rows {
                for c in harness::check_row(&scenario, row) {
                    total += 1;
                    if !c.passed() {
                        missed += 1;
                    }
                    if a.verbose || !c.passed() {
                        report_check(&scenario, &c);
                    }
                }
            }
        }
    }
    eprintln!("{} of {total} cell checks within tolerance", total - missed);
    if a.cases {
        let k = ((STRESS_CLUSTERS as f64 * a.scale).round() as usize).max(2);
        for case in 1..=4 {
            let (_, csv) = run_cases(case, k, 50, &DEFAULT_STEPS, seed)?;
            let path = output::write_case(dir, case, &csv)?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(EXIT_GOOD)
}

fn report_check(s: &StressScenario, c: &CellCheck) {
    let mode = if s.weighted { "weighted" } else { "unweighted" };
    eprintln!("table {} {mode}: {c}", s.axis.table());
}
