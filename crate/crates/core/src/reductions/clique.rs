use alloc::vec::Vec;

use log::warn;

use super::{ReductionError, SimpleGraph};
use crate::graph::{Dag, GraphError, StPath, Vertex};
use crate::instance::{InstanceError, PcrpInstance};

/// Vertex ids of an instance built by [`gen_krpsp`]: the source is 0, the
/// copy of graph vertex `i` in layer `z` (`1..=h`) is `1 + (z - 1) n + i`,
/// and the sink is `h n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrpspLayout {
    pub graph_order: usize,
    pub h: usize,
}

impl KrpspLayout {
    pub fn source(&self) -> Vertex {
        0
    }

    pub fn sink(&self) -> Vertex {
        self.h * self.graph_order + 1
    }

    pub fn copy(&self, i: usize, z: usize) -> Vertex {
        debug_assert!(i < self.graph_order && (1..=self.h).contains(&z));
        1 + (z - 1) * self.graph_order + i
    }

    /// `(i, z)` for a copy vertex; `None` for the source and sink.
    pub fn locate(&self, v: Vertex) -> Option<(usize, usize)> {
        if v == self.source() || v >= self.sink() {
            return None;
        }
        let k = v - 1;
        Some((k % self.graph_order, k / self.graph_order + 1))
    }

    /// `C(h, 2)`, the pair count an `h`-clique path reaches.
    pub fn target(&self) -> usize {
        self.h * (self.h - 1) / 2
    }
}

/// Builds the layered instance: `h` copies of the vertex set, arcs between
/// copies of adjacent vertices in consecutive layers, and a required pair
/// between the copies of adjacent vertices in every two distinct layers
/// (both orientations of each edge).
pub fn gen_krpsp(g: &SimpleGraph, h: usize) -> Result<(PcrpInstance, KrpspLayout), ReductionError> {
    if h < 2 {
        return Err(ReductionError::HTooSmall(h));
    }
    let n = g.vertex_count();
    let layout = KrpspLayout { graph_order: n, h };
    if n == 0 {
        return Err(ReductionError::DisconnectedOutput { vertex: layout.sink() });
    }
    for v in (0..n).filter(|&v| g.degree(v) == 0) {
        warn!("vertex {v} has no neighbour; its copies are dead ends");
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        arcs.push((layout.source(), layout.copy(i, 1)));
        arcs.push((layout.copy(i, h), layout.sink()));
    }
    for (i, j) in g.edges() {
        for z in 1..h {
            arcs.push((layout.copy(i, z), layout.copy(j, z + 1)));
            arcs.push((layout.copy(j, z), layout.copy(i, z + 1)));
        }
    }
    let mut pairs = Vec::new();
    for (i, j) in g.edges() {
        for x in 1..=h {
            for y in x + 1..=h {
                pairs.push((layout.copy(i, x), layout.copy(j, y)));
                pairs.push((layout.copy(j, x), layout.copy(i, y)));
            }
        }
    }
    let dag = Dag::new(layout.sink() + 1, arcs, layout.source(), layout.sink())
        .map_err(InstanceError::from)?;
    match PcrpInstance::new(dag, pairs) {
        Ok(inst) => Ok((inst, layout)),
        Err(InstanceError::Graph(GraphError::NotFromSource(vertex) | GraphError::NotToSink(vertex))) => {
            Err(ReductionError::DisconnectedOutput { vertex })
        }
        Err(e) => Err(e.into()),
    }
}

/// The path through the copy of `clique[z - 1]` in layer `z`.
pub fn clique_to_path(
    g: &SimpleGraph,
    layout: &KrpspLayout,
    clique: &[usize],
) -> Result<StPath, ReductionError> {
    if clique.len() != layout.h {
        return Err(ReductionError::WrongCliqueSize { expected: layout.h, found: clique.len() });
    }
    g.check_clique(clique)?;
    let mut vertices = Vec::with_capacity(layout.h + 2);
    vertices.push(layout.source());
    vertices.extend(clique.iter().enumerate().map(|(z, &i)| layout.copy(i, z + 1)));
    vertices.push(layout.sink());
    Ok(StPath::from_vertices(vertices))
}

/// The `h`-clique formed by the graph vertices a path visits, provided the
/// path covers at least `C(h, 2)` pairs. Returned in ascending order.
pub fn path_to_clique(
    g: &SimpleGraph,
    inst: &PcrpInstance,
    layout: &KrpspLayout,
    path: &StPath,
) -> Result<Vec<usize>, ReductionError> {
    path.check(inst.dag()).map_err(|defect| InstanceError::MalformedPath { index: 0, defect })?;
    let covered = inst.pairs().iter().filter(|p| path.contains(p.first) && path.contains(p.second)).count();
    if covered < layout.target() {
        return Err(ReductionError::NotEnoughPairs { covered, required: layout.target() });
    }
    let mut clique: Vec<usize> = path.vertices().iter().filter_map(|&v| layout.locate(v)).map(|(i, _)| i).collect();
    clique.sort_unstable();
    g.check_clique(&clique)?;
    if clique.len() != layout.h {
        return Err(ReductionError::WrongCliqueSize { expected: layout.h, found: clique.len() });
    }
    Ok(clique)
}
