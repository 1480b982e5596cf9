use alloc::vec;
use alloc::vec::Vec;

use super::{ReductionError, SimpleGraph};
use crate::graph::{stitch_chain, Dag, StPath, Vertex};
use crate::instance::{verify_solution, PcrpInstance, VerifyMode};

/// The five vertices of the gadget for graph vertices `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gadget {
    pub i: usize,
    pub j: usize,
    pub s: Vertex,
    pub n_i: Vertex,
    pub n_j: Vertex,
    pub f: Vertex,
    pub t: Vertex,
    /// `{i, j}` is an edge: `n_i`, `n_j` and `f` are parallel branches.
    /// Otherwise `n_i -> n_j` is a single branch beside `f`.
    pub edge: bool,
}

impl Gadget {
    /// The copy of graph vertex `v` in this gadget.
    pub fn copy_of(&self, v: usize) -> Option<Vertex> {
        if v == self.i {
            Some(self.n_i)
        } else if v == self.j {
            Some(self.n_j)
        } else {
            None
        }
    }
}

/// Vertex ids of an instance built by [`gen_3pcrp`]: the source is 0,
/// gadgets follow in lexicographic order of `(i, j)` with ids
/// `s, n_i, n_j, f, t`, and the sink is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetLayout {
    pub graph_order: usize,
    pub gadgets: Vec<Gadget>,
    pub source: Vertex,
    pub sink: Vertex,
}

impl GadgetLayout {
    pub fn gadget(&self, i: usize, j: usize) -> Option<&Gadget> {
        let (i, j) = (i.min(j), i.max(j));
        self.gadgets.iter().find(|g| g.i == i && g.j == j)
    }

    /// Copies of graph vertex `v`, in gadget order.
    pub fn copies(&self, v: usize) -> Vec<Vertex> {
        self.gadgets.iter().filter_map(|g| g.copy_of(v)).collect()
    }

    pub fn graph(&self) -> SimpleGraph {
        let edges = self.gadgets.iter().filter(|g| g.edge).map(|g| (g.i, g.j));
        SimpleGraph::from_edges(self.graph_order, edges).expect("layout edges are valid")
    }
}

/// Builds the 3-path instance for a connected graph on at least two
/// vertices.
pub fn gen_3pcrp(g: &SimpleGraph) -> Result<(PcrpInstance, GadgetLayout), ReductionError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(ReductionError::TooFewVertices { min: 2, found: n });
    }
    if !g.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    let mut gadgets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let base = 1 + 5 * gadgets.len();
            gadgets.push(Gadget {
                i,
                j,
                s: base,
                n_i: base + 1,
                n_j: base + 2,
                f: base + 3,
                t: base + 4,
                edge: g.has_edge(i, j),
            });
        }
    }
    let source = 0;
    let sink = 1 + 5 * gadgets.len();
    let mut arcs = Vec::new();
    let mut prev = source;
    for d in &gadgets {
        arcs.push((prev, d.s));
        if d.edge {
            arcs.extend([(d.s, d.n_i), (d.s, d.n_j), (d.s, d.f), (d.n_i, d.t), (d.n_j, d.t), (d.f, d.t)]);
        } else {
            arcs.extend([(d.s, d.n_i), (d.s, d.f), (d.n_i, d.n_j), (d.n_j, d.t), (d.f, d.t)]);
        }
        prev = d.t;
    }
    arcs.push((prev, sink));

    let layout = GadgetLayout { graph_order: n, gadgets, source, sink };
    let mut pairs: Vec<(Vertex, Vertex)> =
        layout.gadgets.iter().filter(|d| d.edge).map(|d| (source, d.f)).collect();
    for v in 0..n {
        let copies = layout.copies(v);
        for (a, &x) in copies.iter().enumerate() {
            pairs.extend(copies[a + 1..].iter().map(|&y| (x, y)));
        }
    }
    let dag = Dag::new(sink + 1, arcs, source, sink).map_err(crate::instance::InstanceError::from)?;
    let inst = PcrpInstance::new(dag, pairs)?;
    Ok((inst, layout))
}

/// Three covering paths from a proper 3-colouring (colours `0..3`). The
/// path for colour `c` takes, in every gadget, the copy of an endpoint
/// coloured `c` (both copies when both are), and `f` otherwise.
pub fn coloring_to_paths(
    inst: &PcrpInstance,
    layout: &GadgetLayout,
    colouring: &[u8],
) -> Result<[StPath; 3], ReductionError> {
    layout.graph().check_3coloring(colouring)?;
    let mut out = Vec::with_capacity(3);
    for c in 0..3u8 {
        let mut anchors = Vec::with_capacity(2 * layout.gadgets.len());
        for d in &layout.gadgets {
            let own_i = colouring[d.i] == c;
            let own_j = colouring[d.j] == c;
            if own_i {
                anchors.push(d.n_i);
            }
            if own_j {
                anchors.push(d.n_j);
            }
            if !own_i && !own_j {
                anchors.push(d.f);
            }
        }
        out.push(stitch_chain(inst.dag(), inst.reach(), &anchors).map_err(crate::instance::InstanceError::from)?);
    }
    let third = out.pop().expect("three paths");
    let second = out.pop().expect("three paths");
    let first = out.pop().expect("three paths");
    Ok([first, second, third])
}

/// Reads a proper 3-colouring off three covering paths: vertex `v` gets
/// the index of the first path carrying all its copies.
pub fn paths_to_coloring(
    inst: &PcrpInstance,
    layout: &GadgetLayout,
    paths: &[StPath],
) -> Result<Vec<u8>, ReductionError> {
    if paths.len() != 3 {
        return Err(ReductionError::WrongPathCount { expected: 3, found: paths.len() });
    }
    let report = verify_solution(inst, paths, VerifyMode::CoverAll)?;
    if !report.is_valid() {
        return Err(ReductionError::InvalidCover {
            vertices: report.uncovered_vertices.len(),
            pairs: report.uncovered_pairs.len(),
        });
    }
    let mut colouring = vec![0u8; layout.graph_order];
    for (v, slot) in colouring.iter_mut().enumerate() {
        let copies = layout.copies(v);
        let x = paths
            .iter()
            .position(|p| copies.iter().all(|&c| p.contains(c)))
            .ok_or(ReductionError::SplitVertex(v))?;
        *slot = x as u8;
    }
    layout.graph().check_3coloring(&colouring)?;
    Ok(colouring)
}
