//! Line-oriented text formats.
//!
//! Instance:
//!
//! ```text
//! pcrp 1
//! n 5 s 0 t 4
//! a 0 1
//! p 1 3
//! ```
//!
//! Solution: `k <count>` followed by one path per line. Graph: `graph <n>`
//! followed by `e <u> <v>` lines. Reduction sidecar: `pcrp-map 1`, a
//! `kind` line, the source graph, then the vertex layout. In every format
//! `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use log::warn;
use pcrp_core::graph::{collapse_sccs, GraphError};
use pcrp_core::instance::InstanceError;
use pcrp_core::reductions::{Gadget, GadgetLayout, KrpspLayout, ReductionError, SimpleGraph};
use pcrp_core::{Dag, PcrpInstance, StPath, Vertex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid instance: {0}")]
    Validation(#[from] InstanceError),
    #[error("invalid graph: {0}")]
    Graph(#[from] ReductionError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((k + 1, words))
    })
}

fn number(line: usize, word: &str) -> Result<usize, FormatError> {
    word.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{word}`")))
}

fn expect_words(line: usize, words: &[&str], shape: &[&str]) -> Result<Vec<usize>, FormatError> {
    if words.len() != shape.len() {
        return Err(parse_err(line, format!("expected `{}`", shape.join(" "))));
    }
    let mut nums = Vec::new();
    for (w, s) in words.iter().zip(shape) {
        if s.starts_with('<') {
            nums.push(number(line, w)?);
        } else if w != s {
            return Err(parse_err(line, format!("expected `{s}`, found `{w}`")));
        }
    }
    Ok(nums)
}

/// A parsed instance. When the arcs contain cycles, strongly connected
/// components are collapsed first and `collapsed` maps each file vertex to
/// its component.
#[derive(Debug, Clone)]
pub struct ParsedInstance {
    pub instance: PcrpInstance,
    pub collapsed: Option<Vec<Vertex>>,
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, FormatError> {
    let mut lines = content_lines(text);
    let (l1, magic) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    expect_words(l1, &magic, &["pcrp", "1"])?;
    let (l2, header) = lines.next().ok_or_else(|| parse_err(l1 + 1, "missing `n .. s .. t ..` line"))?;
    let h = expect_words(l2, &header, &["n", "<count>", "s", "<source>", "t", "<sink>"])?;
    let (n, s, t) = (h[0], h[1], h[2]);
    if n == 0 {
        return Err(parse_err(l2, "vertex count must be positive"));
    }
    for v in [s, t] {
        if v >= n {
            return Err(parse_err(l2, format!("vertex {v} out of range 0..{n}")));
        }
    }
    let mut arcs = Vec::new();
    let mut pairs = Vec::new();
    for (line, words) in lines {
        let (list, tag) = match words[0] {
            "a" => (&mut arcs, "a"),
            "p" => (&mut pairs, "p"),
            other => return Err(parse_err(line, format!("unknown record `{other}`"))),
        };
        let ids = expect_words(line, &words, &[tag, "<u>", "<v>"])?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= n) {
            return Err(parse_err(line, format!("vertex {bad} out of range 0..{n}")));
        }
        list.push((ids[0], ids[1]));
    }

    if let Some(&(u, _)) = arcs.iter().find(|&&(u, v)| u == v) {
        return Err(InstanceError::Graph(GraphError::SelfLoop(u)).into());
    }
    match Dag::new(n, arcs.iter().copied(), s, t) {
        Ok(dag) => Ok(ParsedInstance { instance: PcrpInstance::new(dag, pairs)?, collapsed: None }),
        Err(GraphError::CycleDetected) => {
            let (dag, map) = collapse_sccs(n, &arcs, s, t).map_err(InstanceError::from)?;
            warn!("arcs contain cycles; collapsed {n} vertices into {}", dag.vertex_count());
            let mut kept = Vec::new();
            for &(a, b) in &pairs {
                if map[a] == map[b] {
                    warn!("pair ({a}, {b}) lies inside one strongly connected component and is dropped");
                } else {
                    kept.push((map[a], map[b]));
                }
            }
            Ok(ParsedInstance { instance: PcrpInstance::new(dag, kept)?, collapsed: Some(map) })
        }
        Err(e) => Err(InstanceError::from(e).into()),
    }
}

/// Canonical text: arcs then pairs, each in ascending order.
pub fn write_instance(inst: &PcrpInstance) -> String {
    let dag = inst.dag();
    let mut out = String::from("pcrp 1\n");
    let _ = writeln!(out, "n {} s {} t {}", dag.vertex_count(), dag.source(), dag.sink());
    for (u, v) in dag.arcs() {
        let _ = writeln!(out, "a {u} {v}");
    }
    let mut pairs: Vec<_> = inst.pairs().to_vec();
    pairs.sort_unstable();
    for p in pairs {
        let _ = writeln!(out, "p {} {}", p.first, p.second);
    }
    out
}

pub fn write_solution(paths: &[StPath]) -> String {
    let mut out = format!("k {}\n", paths.len());
    for p in paths {
        let line: Vec<String> = p.vertices().iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Paths are returned unchecked; see `verify_solution`.
pub fn parse_solution(text: &str) -> Result<Vec<StPath>, FormatError> {
    let mut lines = content_lines(text);
    let (l1, head) = lines.next().ok_or_else(|| parse_err(1, "empty solution"))?;
    let k = expect_words(l1, &head, &["k", "<count>"])?[0];
    let mut paths = Vec::with_capacity(k);
    let mut last = l1;
    for (line, words) in lines {
        let ids = words.iter().map(|w| number(line, w)).collect::<Result<Vec<_>, _>>()?;
        paths.push(StPath::from_vertices(ids));
        last = line;
    }
    if paths.len() != k {
        return Err(parse_err(last, format!("header announces {k} paths, found {}", paths.len())));
    }
    Ok(paths)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut lines = content_lines(text);
    let (l1, head) = lines.next().ok_or_else(|| parse_err(1, "empty graph file"))?;
    let n = expect_words(l1, &head, &["graph", "<n>"])?[0];
    let mut g = SimpleGraph::new(n);
    for (line, words) in lines {
        let e = expect_words(line, &words, &["e", "<u>", "<v>"])?;
        g.add_edge(e[0], e[1]).map_err(|err| parse_err(line, err.to_string()))?;
    }
    Ok(g)
}

/// Vertex layout of a generated reduction instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sidecar {
    Coloring { graph: SimpleGraph, layout: GadgetLayout },
    Clique { graph: SimpleGraph, layout: KrpspLayout },
}

pub fn write_sidecar(map: &Sidecar) -> String {
    let mut out = String::from("pcrp-map 1\n");
    match map {
        Sidecar::Coloring { graph, layout } => {
            out.push_str("kind 3col\n");
            out.push_str(&write_graph(graph));
            let _ = writeln!(out, "source {}\nsink {}", layout.source, layout.sink);
            for d in &layout.gadgets {
                let _ = writeln!(
                    out,
                    "gadget {} {} {} {} {} {} {} {}",
                    d.i, d.j, d.s, d.n_i, d.n_j, d.f, d.t, d.edge as u8
                );
            }
        }
        Sidecar::Clique { graph, layout } => {
            out.push_str("kind clique\n");
            out.push_str(&write_graph(graph));
            let _ = writeln!(out, "h {}\nsource {}\nsink {}", layout.h, layout.source(), layout.sink());
            for z in 1..=layout.h {
                for i in 0..layout.graph_order {
                    let _ = writeln!(out, "copy {i} {z} {}", layout.copy(i, z));
                }
            }
        }
    }
    out
}

pub fn parse_sidecar(text: &str) -> Result<Sidecar, FormatError> {
    let lines: Vec<(usize, Vec<&str>)> = content_lines(text).collect();
    let get = |k: usize| lines.get(k).ok_or_else(|| parse_err(lines.last().map_or(1, |l| l.0), "truncated map"));
    let (l1, magic) = get(0)?;
    expect_words(*l1, magic, &["pcrp-map", "1"])?;
    let (l2, kind) = get(1)?;
    if kind.len() != 2 || kind[0] != "kind" {
        return Err(parse_err(*l2, "expected `kind 3col` or `kind clique`"));
    }
    let (l3, head) = get(2)?;
    let n = expect_words(*l3, head, &["graph", "<n>"])?[0];
    let mut graph = SimpleGraph::new(n);
    let mut k = 3;
    while let Some((line, words)) = lines.get(k).filter(|(_, w)| w[0] == "e") {
        let e = expect_words(*line, words, &["e", "<u>", "<v>"])?;
        graph.add_edge(e[0], e[1]).map_err(|err| parse_err(*line, err.to_string()))?;
        k += 1;
    }
    match kind[1] {
        "3col" => {
            let (ls, ws) = get(k)?;
            let source = expect_words(*ls, ws, &["source", "<id>"])?[0];
            let (lt, wt) = get(k + 1)?;
            let sink = expect_words(*lt, wt, &["sink", "<id>"])?[0];
            let mut gadgets = Vec::new();
            for (line, words) in &lines[k + 2..] {
                let g = expect_words(*line, words, &["gadget", "<i>", "<j>", "<s>", "<ni>", "<nj>", "<f>", "<t>", "<edge>"])?;
                gadgets.push(Gadget { i: g[0], j: g[1], s: g[2], n_i: g[3], n_j: g[4], f: g[5], t: g[6], edge: g[7] != 0 });
            }
            Ok(Sidecar::Coloring { graph, layout: GadgetLayout { graph_order: n, gadgets, source, sink } })
        }
        "clique" => {
            let (lh, wh) = get(k)?;
            let h = expect_words(*lh, wh, &["h", "<h>"])?[0];
            let layout = KrpspLayout { graph_order: n, h };
            for (line, words) in &lines[k + 1..] {
                match words[0] {
                    "source" | "sink" => {}
                    "copy" => {
                        let c = expect_words(*line, words, &["copy", "<i>", "<z>", "<id>"])?;
                        if c[0] >= n || c[1] == 0 || c[1] > h || layout.copy(c[0], c[1]) != c[2] {
                            return Err(parse_err(*line, "copy id does not match the layered layout"));
                        }
                    }
                    other => return Err(parse_err(*line, format!("unknown record `{other}`"))),
                }
            }
            Ok(Sidecar::Clique { graph, layout })
        }
        other => Err(parse_err(*l2, format!("unknown map kind `{other}`"))),
    }
}
