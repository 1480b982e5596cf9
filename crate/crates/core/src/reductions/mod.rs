//! Hardness reductions as instance generators, with solution mappings in
//! both directions, plus exact oracles for the source problems.
//!
//! - [`gen_3pcrp`] maps a connected graph to an instance that three paths
//!   can cover iff the graph is 3-colourable.
//! - [`gen_krpsp`] maps a graph and `h` to a layered instance in which one
//!   path covers `C(h, 2)` pairs iff the graph has an `h`-clique.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::Vertex;
use crate::instance::InstanceError;

mod clique;
mod coloring;
mod oracles;

pub use clique::{clique_to_path, gen_krpsp, path_to_clique, KrpspLayout};
pub use coloring::{coloring_to_paths, gen_3pcrp, paths_to_coloring, Gadget, GadgetLayout};
pub use oracles::{brute_3coloring, brute_max_clique, CLIQUE_LIMIT, COLORING_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("vertex {vertex} out of range (vertex count {count})")]
    UnknownVertex { vertex: usize, count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph needs at least {min} vertices, has {found}")]
    TooFewVertices { min: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("generated instance is not source/sink connected at vertex {vertex}")]
    DisconnectedOutput { vertex: Vertex },
    #[error("h must be at least 2, got {0}")]
    HTooSmall(usize),
    #[error("colouring has {found} entries for {expected} vertices")]
    ColoringLength { expected: usize, found: usize },
    #[error("colour {colour} of vertex {vertex} is not in 0..3")]
    ColourOutOfRange { vertex: usize, colour: u8 },
    #[error("edge {{{u}, {v}}} is monochromatic")]
    ImproperColoring { u: usize, v: usize },
    #[error("expected {expected} paths, got {found}")]
    WrongPathCount { expected: usize, found: usize },
    #[error("paths do not cover the instance: {vertices} vertices and {pairs} pairs uncovered")]
    InvalidCover { vertices: usize, pairs: usize },
    #[error("no path carries every copy of vertex {0}")]
    SplitVertex(usize),
    #[error("clique has {found} vertices, expected {expected}")]
    WrongCliqueSize { expected: usize, found: usize },
    #[error("{u} and {v} are not adjacent")]
    NotAClique { u: usize, v: usize },
    #[error("path covers {covered} pairs, needs {required}")]
    NotEnoughPairs { covered: usize, required: usize },
    #[error("graph has {found} vertices, above the oracle limit of {limit}")]
    SizeLimitExceeded { found: usize, limit: usize },
}

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<FixedBitSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Duplicate edges are merged; self-loops and unknown ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, ReductionError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), ReductionError> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(ReductionError::UnknownVertex { vertex: x, count: n });
            }
        }
        if u == v {
            return Err(ReductionError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True for the empty graph and for graphs with one component.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].ones() {
                if !seen.put(v) {
                    stack.push(v);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// Checks that `colouring` uses colours `0..3` and no edge is
    /// monochromatic.
    pub fn check_3coloring(&self, colouring: &[u8]) -> Result<(), ReductionError> {
        if colouring.len() != self.vertex_count() {
            return Err(ReductionError::ColoringLength { expected: self.vertex_count(), found: colouring.len() });
        }
        if let Some((vertex, &colour)) = colouring.iter().enumerate().find(|&(_, &c)| c >= 3) {
            return Err(ReductionError::ColourOutOfRange { vertex, colour });
        }
        match self.edges().find(|&(u, v)| colouring[u] == colouring[v]) {
            Some((u, v)) => Err(ReductionError::ImproperColoring { u, v }),
            None => Ok(()),
        }
    }

    /// Checks that `vertices` are distinct and pairwise adjacent.
    pub fn check_clique(&self, vertices: &[usize]) -> Result<(), ReductionError> {
        for (k, &u) in vertices.iter().enumerate() {
            if u >= self.vertex_count() {
                return Err(ReductionError::UnknownVertex { vertex: u, count: self.vertex_count() });
            }
            for &v in &vertices[k + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return Err(ReductionError::NotAClique { u, v });
                }
            }
        }
        Ok(())
    }
}
