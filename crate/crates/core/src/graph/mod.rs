//! DAG representation, orderings, reachability, preprocessing transforms,
//! and path utilities.
//!
//! Vertices are dense `0..n` integer ids. A [`Dag`] is immutable once built:
//! construction rejects unknown ids, self-loops and cycles, and caches one
//! deterministic topological order (Kahn's algorithm, smallest id first).

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use thiserror::Error;

mod paths;
mod reach;
mod scc;

pub use paths::{
    connect, count_st_paths, enumerate_st_paths, stitch_chain, PathDefect, StPath, StPaths,
};
pub use reach::{is_chain, ReachabilityIndex};
pub use scc::collapse_sccs;

/// Dense vertex id.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range (vertex count {count})")]
    UnknownVertex { vertex: Vertex, count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("arc set contains a directed cycle")]
    CycleDetected,
    #[error("vertex {0} is not reachable from the source")]
    NotFromSource(Vertex),
    #[error("vertex {0} does not reach the sink")]
    NotToSink(Vertex),
    #[error("cannot contract the source or sink vertex {0}")]
    ContractEndpoint(Vertex),
    #[error("no directed path from {from} to {to}")]
    NotReachable { from: Vertex, to: Vertex },
    #[error("more than {limit} source-to-sink paths")]
    PathBudgetExceeded { limit: usize },
}

/// A fixed topological order: `order[k]` is the vertex of rank `k` and
/// `position[v]` is the rank of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoOrder {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl TopoOrder {
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }
}

/// Kahn's algorithm over a raw arc list; ties broken by ascending vertex id.
pub fn topological_sort(
    vertex_count: usize,
    arcs: &[(Vertex, Vertex)],
) -> Result<TopoOrder, GraphError> {
    let mut succ = vec![Vec::new(); vertex_count];
    for &(u, v) in arcs {
        check_id(u, vertex_count)?;
        check_id(v, vertex_count)?;
        succ[u].push(v);
    }
    for list in &mut succ {
        list.sort_unstable();
        list.dedup();
    }
    kahn(&succ)
}

fn kahn(succ: &[Vec<Vertex>]) -> Result<TopoOrder, GraphError> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for list in succ {
        for &v in list {
            indegree[v] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in &succ[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if order.len() != n {
        return Err(GraphError::CycleDetected);
    }
    let mut position = vec![0; n];
    for (rank, &v) in order.iter().enumerate() {
        position[v] = rank;
    }
    Ok(TopoOrder { order, position })
}

fn check_id(v: Vertex, count: usize) -> Result<(), GraphError> {
    if v < count {
        Ok(())
    } else {
        Err(GraphError::UnknownVertex { vertex: v, count })
    }
}

/// Directed acyclic graph with a designated source and sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    succ: Vec<Vec<Vertex>>,
    pred: Vec<Vec<Vertex>>,
    source: Vertex,
    sink: Vertex,
    arc_count: usize,
    topo: TopoOrder,
}

impl Dag {
    /// Builds a DAG, merging duplicate arcs. Source/sink connectivity is not
    /// checked here; see [`Dag::check_st_connectivity`].
    pub fn new<I>(vertex_count: usize, arcs: I, source: Vertex, sink: Vertex) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        check_id(source, vertex_count)?;
        check_id(sink, vertex_count)?;
        let mut succ = vec![Vec::new(); vertex_count];
        for (u, v) in arcs {
            check_id(u, vertex_count)?;
            check_id(v, vertex_count)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            succ[u].push(v);
        }
        let mut pred = vec![Vec::new(); vertex_count];
        let mut arc_count = 0;
        for (u, list) in succ.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            arc_count += list.len();
            for &v in list.iter() {
                pred[v].push(u);
            }
        }
        let topo = kahn(&succ)?;
        Ok(Dag { succ, pred, source, sink, arc_count, topo })
    }

    pub fn vertex_count(&self) -> usize {
        self.succ.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn sink(&self) -> Vertex {
        self.sink
    }

    /// Successors in ascending id order.
    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[v]
    }

    /// Predecessors in ascending id order.
    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.pred[v]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.succ.len() && self.succ[u].binary_search(&v).is_ok()
    }

    /// All arcs in ascending lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn topo(&self) -> &TopoOrder {
        &self.topo
    }

    /// Checks that the source reaches every vertex and every vertex reaches
    /// the sink. Reports the smallest offending vertex.
    pub fn check_st_connectivity(&self) -> Result<(), GraphError> {
        let from_source = self.sweep(self.source, &self.succ);
        if let Some(v) = from_source.iter().position(|&seen| !seen) {
            return Err(GraphError::NotFromSource(v));
        }
        let to_sink = self.sweep(self.sink, &self.pred);
        if let Some(v) = to_sink.iter().position(|&seen| !seen) {
            return Err(GraphError::NotToSink(v));
        }
        Ok(())
    }

    fn sweep(&self, start: Vertex, adj: &[Vec<Vertex>]) -> Vec<bool> {
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Vertices from which the sink is reachable.
    pub(crate) fn reaches_sink(&self) -> Vec<bool> {
        self.sweep(self.sink, &self.pred)
    }
}

/// Result of [`contract_vertex`]: the smaller DAG plus the id translation
/// between the old and new vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub dag: Dag,
    /// `old_to_new[v]` is `None` exactly for the contracted vertex.
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

/// Removes `v`, adding an arc `(u, z)` for every in-neighbour `u` and
/// out-neighbour `z` of `v`. Remaining vertices are renumbered densely in
/// their original relative order.
pub fn contract_vertex(dag: &Dag, v: Vertex) -> Result<Contraction, GraphError> {
    check_id(v, dag.vertex_count())?;
    if v == dag.source || v == dag.sink {
        return Err(GraphError::ContractEndpoint(v));
    }
    let n = dag.vertex_count();
    let mut old_to_new = vec![None; n];
    let mut new_to_old = Vec::with_capacity(n - 1);
    for u in (0..n).filter(|&u| u != v) {
        old_to_new[u] = Some(new_to_old.len());
        new_to_old.push(u);
    }
    let id = |u: Vertex| old_to_new[u].expect("contracted vertex has no new id");
    let mut arcs: Vec<(Vertex, Vertex)> = dag
        .arcs()
        .filter(|&(a, b)| a != v && b != v)
        .map(|(a, b)| (id(a), id(b)))
        .collect();
    for &u in dag.predecessors(v) {
        for &z in dag.successors(v) {
            arcs.push((id(u), id(z)));
        }
    }
    let dag = Dag::new(n - 1, arcs, id(dag.source), id(dag.sink))?;
    Ok(Contraction { dag, old_to_new, new_to_old })
}
