//! Edge-list and label-file formats.
//!
//! Edge list: one edge per line, whitespace separated `u v [w]`. Label file:
//! one `vertex cluster` pair per line. In both, blank lines and lines starting
//! with `#` are skipped. Vertex and cluster ids are arbitrary non-negative
//! integers; they are remapped to dense ranges in increasing id order.

use std::collections::{BTreeSet, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use log::warn;
use thiserror::Error;

use crate::graph::{Clustering, Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{source_name}:{line}: {message}")]
    Syntax {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("{source_name}:{line}: edge ({u}, {v}) listed with conflicting weights {first} and {second}")]
    ConflictingWeight {
        source_name: String,
        line: usize,
        u: u64,
        v: u64,
        first: f64,
        second: f64,
    },
    #[error("{source_name}:{line}: self-loop on vertex {vertex}")]
    SelfLoop {
        source_name: String,
        line: usize,
        vertex: u64,
    },
    #[error("{source_name}:{line}: vertex {vertex} is labelled more than once")]
    DuplicateVertex {
        source_name: String,
        line: usize,
        vertex: u64,
    },
    #[error("{source_name}: vertex {vertex} has no cluster label")]
    MissingVertex { source_name: String, vertex: u64 },
    #[error("{source_name}: vertex {vertex} is labelled but absent from the graph")]
    UnknownVertex { source_name: String, vertex: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// How the edge-list reader treats `u u` lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelfLoops {
    #[default]
    Reject,
    /// Drop with a warning (used when symmetrizing directed data).
    Drop,
}

/// Undirected edges read from a file, keyed by original vertex ids.
#[derive(Debug, Clone, Default)]
pub struct RawEdges {
    /// `(min_id, max_id, weight)` in file order, one per undirected pair.
    pub edges: Vec<(u64, u64, Option<f64>)>,
    pub collapsed_duplicates: usize,
    pub dropped_self_loops: usize,
}

fn syntax(source_name: &str, line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        source_name: source_name.to_string(),
        line,
        message: message.into(),
    }
}

fn content_lines<'a, R: BufRead + 'a>(
    reader: R,
    source_name: &'a str,
) -> impl Iterator<Item = Result<(usize, String), ParseError>> + 'a {
    reader
        .lines()
        .enumerate()
        .filter_map(move |(i, line)| match line {
            Err(e) => Some(Err(ParseError::Io {
                path: source_name.to_string(),
                source: e,
            })),
            Ok(l) => {
                let t = l.trim();
                (!t.is_empty() && !t.starts_with('#')).then(|| Ok((i + 1, t.to_string())))
            }
        })
}

fn parse_id(tok: &str, source_name: &str, line: usize, what: &str) -> Result<u64, ParseError> {
    tok.parse()
        .map_err(|_| syntax(source_name, line, format!("invalid {what} `{tok}`")))
}

/// Reads an edge list. Reversed and repeated pairs collapse into one edge with
/// a warning; a repeated pair with a different weight is an error.
pub fn read_edge_list<R: BufRead>(
    reader: R,
    source_name: &str,
    self_loops: SelfLoops,
) -> Result<RawEdges, ParseError> {
    let mut out = RawEdges::default();
    let mut seen: HashMap<(u64, u64), (usize, Option<f64>)> = HashMap::new();
    let mut weighted = None;
    for item in content_lines(reader, source_name) {
        let (line, text) = item?;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if !(2..=3).contains(&toks.len()) {
            return Err(syntax(source_name, line, "expected `u v [weight]`"));
        }
        let u = parse_id(toks[0], source_name, line, "vertex id")?;
        let v = parse_id(toks[1], source_name, line, "vertex id")?;
        let w = match toks.get(2) {
            Some(t) => Some(
                t.parse::<f64>()
                    .map_err(|_| syntax(source_name, line, format!("invalid weight `{t}`")))?,
            ),
            None => None,
        };
        if let Some(w) = w {
            if !(w > 0.0 && w.is_finite()) {
                return Err(syntax(source_name, line, format!("weight must be positive, got {w}")));
            }
        }
        match weighted {
            None => weighted = Some(w.is_some()),
            Some(flag) if flag != w.is_some() => {
                return Err(syntax(source_name, line, "mixes weighted and unweighted edges"));
            }
            _ => {}
        }
        if u == v {
            match self_loops {
                SelfLoops::Reject => {
                    return Err(ParseError::SelfLoop {
                        source_name: source_name.to_string(),
                        line,
                        vertex: u,
                    })
                }
                SelfLoops::Drop => {
                    out.dropped_self_loops += 1;
                    continue;
                }
            }
        }
        let key = (u.min(v), u.max(v));
        match seen.get(&key) {
            Some(&(_, first)) => {
                if first != w {
                    return Err(ParseError::ConflictingWeight {
                        source_name: source_name.to_string(),
                        line,
                        u: key.0,
                        v: key.1,
                        first: first.unwrap_or(1.0),
                        second: w.unwrap_or(1.0),
                    });
                }
                out.collapsed_duplicates += 1;
            }
            None => {
                seen.insert(key, (line, w));
                out.edges.push((key.0, key.1, w));
            }
        }
    }
    if out.collapsed_duplicates > 0 {
        warn!(
            "{source_name}: collapsed {} repeated or reversed edge(s)",
            out.collapsed_duplicates
        );
    }
    if out.dropped_self_loops > 0 {
        warn!("{source_name}: dropped {} self-loop(s)", out.dropped_self_loops);
    }
    Ok(out)
}

/// Reads `vertex cluster` pairs, rejecting a vertex listed twice.
pub fn read_labels<R: BufRead>(reader: R, source_name: &str) -> Result<Vec<(u64, u64)>, ParseError> {
    let mut out = Vec::new();
    let mut seen = HashMap::new();
    for item in content_lines(reader, source_name) {
        let (line, text) = item?;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(source_name, line, "expected `vertex cluster`"));
        }
        let vertex = parse_id(toks[0], source_name, line, "vertex id")?;
        let cluster = parse_id(toks[1], source_name, line, "cluster id")?;
        if seen.insert(vertex, line).is_some() {
            return Err(ParseError::DuplicateVertex {
                source_name: source_name.to_string(),
                line,
                vertex,
            });
        }
        out.push((vertex, cluster));
    }
    Ok(out)
}

/// A graph with one or more clusterings of its vertices.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub clusterings: Vec<Clustering>,
    /// Original id of each dense vertex index.
    pub vertex_ids: Vec<u64>,
    /// Original cluster ids of each clustering, by dense cluster index.
    pub cluster_ids: Vec<Vec<u64>>,
}

/// Joins an edge list with label sets.
///
/// The vertex set is every id in the edge list plus every id in the first
/// label set (so isolated vertices are declared by their labels). Each label
/// set must cover exactly that vertex set.
pub fn assemble(
    edges: &RawEdges,
    label_sets: &[(String, Vec<(u64, u64)>)],
) -> Result<Instance, ParseError> {
    let mut ids: BTreeSet<u64> = edges.edges.iter().flat_map(|e| [e.0, e.1]).collect();
    if let Some((_, first)) = label_sets.first() {
        ids.extend(first.iter().map(|p| p.0));
    }
    let vertex_ids: Vec<u64> = ids.into_iter().collect();
    let index: HashMap<u64, usize> = vertex_ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();

    let graph = Graph::build(
        vertex_ids.len(),
        edges.edges.iter().map(|&(u, v, w)| (index[&u], index[&v], w)),
    )?;

    let mut clusterings = Vec::with_capacity(label_sets.len());
    let mut cluster_ids = Vec::with_capacity(label_sets.len());
    for (name, pairs) in label_sets {
        let mut assigned: Vec<Option<u64>> = vec![None; vertex_ids.len()];
        for &(vertex, cluster) in pairs {
            match index.get(&vertex) {
                Some(&i) => assigned[i] = Some(cluster),
                None => {
                    return Err(ParseError::UnknownVertex {
                        source_name: name.clone(),
                        vertex,
                    })
                }
            }
        }
        if let Some(i) = assigned.iter().position(Option::is_none) {
            return Err(ParseError::MissingVertex {
                source_name: name.clone(),
                vertex: vertex_ids[i],
            });
        }
        let ids: Vec<u64> = assigned
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let dense: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let labels = assigned.iter().map(|c| dense[&c.unwrap()]).collect();
        clusterings.push(Clustering::new(labels, ids.len())?);
        cluster_ids.push(ids);
    }
    Ok(Instance {
        graph,
        clusterings,
        vertex_ids,
        cluster_ids,
    })
}

fn open(path: &Path) -> Result<BufReader<File>, ParseError> {
    File::open(path).map(BufReader::new).map_err(|e| ParseError::Io {
        path: path.display().to_string(),
        source: e,
    })
}

/// Loads a graph file and any number of label files.
pub fn load_instance(
    graph_path: &Path,
    label_paths: &[&Path],
    self_loops: SelfLoops,
) -> Result<Instance, ParseError> {
    let name = graph_path.display().to_string();
    let edges = read_edge_list(open(graph_path)?, &name, self_loops)?;
    let mut sets = Vec::with_capacity(label_paths.len());
    for p in label_paths {
        let name = p.display().to_string();
        let labels = read_labels(open(p)?, &name)?;
        sets.push((name, labels));
    }
    assemble(&edges, &sets)
}

/// Writes `u v [w]` lines with dense vertex ids.
pub fn write_edge_list<W: Write>(g: &Graph, out: W) -> std::io::Result<()> {
    let mut out = BufWriter::new(out);
    writeln!(out, "# vertices {} edges {}", g.vertex_count(), g.edge_count())?;
    match g.weights() {
        Some(w) => {
            for (&(u, v), w) in g.edges().iter().zip(w) {
                writeln!(out, "{u} {v} {w}")?;
            }
        }
        None => {
            for &(u, v) in g.edges() {
                writeln!(out, "{u} {v}")?;
            }
        }
    }
    out.flush()
}

/// Writes `vertex cluster` lines with dense ids.
pub fn write_labels<W: Write>(c: &Clustering, out: W) -> std::io::Result<()> {
    let mut out = BufWriter::new(out);
    for (v, l) in c.labels().iter().enumerate() {
        writeln!(out, "{v} {l}")?;
    }
    out.flush()
}
