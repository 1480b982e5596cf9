//! Path-cover solvers: the classic minimum path cover, the 1- and 2-path
//! decision procedures, exact search oracles, and a greedy heuristic.
//!
//! Every solver returns source-to-sink paths that pass
//! [`verify_solution`](crate::instance::verify_solution) in cover-all mode.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{is_chain, stitch_chain, GraphError, StPath, Vertex};
use crate::instance::{augment_trivial_pairs, InstanceError, PcrpInstance, RequiredPair};

mod exact;
mod greedy;
mod matching;

pub use exact::{exact_minpcrp, exact_minpcrp_chains};
pub use greedy::greedy_minpcrp;
pub use matching::{min_chain_cover, min_path_cover};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("infeasible: uncoverable pair ({a},{b})")]
    Infeasible { a: Vertex, b: Vertex },
    #[error("search exceeded {limit} nodes")]
    SearchBudgetExceeded { limit: u64 },
}

pub(crate) fn require_coverable(inst: &PcrpInstance) -> Result<(), CoverError> {
    match inst.first_uncoverable() {
        Some(p) => Err(CoverError::Infeasible { a: p.first, b: p.second }),
        None => Ok(()),
    }
}

/// One path covering everything, if the reachability relation totally
/// orders the vertices. The path is the topological order itself.
pub fn solve_1pcrp(inst: &PcrpInstance) -> Option<StPath> {
    if inst.first_uncoverable().is_some() {
        return None;
    }
    let order = inst.dag().topo().order();
    if !inst.reach().is_ordered_chain(order) {
        return None;
    }
    Some(StPath::from_vertices(order.to_vec()))
}

/// Undirected graph over the pairs of an instance: two pairs are adjacent
/// when one path covers both, i.e. when their four vertices form a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCompatGraph {
    rows: Vec<FixedBitSet>,
}

impl PairCompatGraph {
    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbours(&self, a: usize) -> &FixedBitSet {
        &self.rows[a]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }
}

fn compatible(p: RequiredPair, q: RequiredPair, inst: &PcrpInstance) -> bool {
    let r = inst.reach();
    r.comparable(p.first, q.first)
        && r.comparable(p.first, q.second)
        && r.comparable(p.second, q.first)
        && r.comparable(p.second, q.second)
}

/// Builds the compatibility graph over `inst.pairs()` (by input position).
/// The instance is expected to be augmented already.
pub fn pair_compat_graph(inst: &PcrpInstance) -> Result<PairCompatGraph, CoverError> {
    require_coverable(inst)?;
    let pairs = inst.pairs();
    let m = pairs.len();
    let mut rows = vec![FixedBitSet::with_capacity(m); m];
    for a in 0..m {
        for b in a + 1..m {
            if compatible(pairs[a], pairs[b], inst) {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    Ok(PairCompatGraph { rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPathSolution {
    pub paths: [StPath; 2],
    /// One path already suffices; both entries hold it.
    pub single_path: bool,
}

/// Decides whether two paths cover all vertices and pairs, and builds them.
///
/// After adding `(source, v)` for every vertex in no pair, a set of pairs
/// lies on one path iff it is a clique of the compatibility graph, so the
/// question is whether the complement of that graph is bipartite. The
/// complement is never materialised; the 2-colouring walks complemented
/// bitset rows, lowest index first.
pub fn solve_2pcrp(inst: &PcrpInstance) -> Result<Option<TwoPathSolution>, CoverError> {
    require_coverable(inst)?;
    if let Some(path) = solve_1pcrp(inst) {
        return Ok(Some(TwoPathSolution { paths: [path.clone(), path], single_path: true }));
    }
    let aug = augment_trivial_pairs(inst);
    let graph = pair_compat_graph(&aug)?;
    let m = graph.vertex_count();
    let mut colour: Vec<Option<u8>> = vec![None; m];
    for start in 0..m {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let mut strangers = graph.neighbours(u).clone();
            strangers.toggle_range(..);
            strangers.set(u, false);
            let cu = colour[u].expect("queued vertices are coloured");
            for w in strangers.ones() {
                match colour[w] {
                    None => {
                        colour[w] = Some(1 - cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let mut paths = Vec::with_capacity(2);
    for c in 0..2u8 {
        let vertices: Vec<Vertex> = aug
            .pairs()
            .iter()
            .zip(&colour)
            .filter(|&(_, &k)| k == Some(c))
            .flat_map(|(p, _)| [p.first, p.second])
            .collect();
        let chain = is_chain(&vertices, aug.reach()).expect("a clique of pairs spans a chain");
        paths.push(stitch_chain(aug.dag(), aug.reach(), &chain)?);
    }
    let second = paths.pop().expect("two paths");
    let first = paths.pop().expect("two paths");
    Ok(Some(TwoPathSolution { paths: [first, second], single_path: false }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Dag;
    use crate::instance::{verify_solution, VerifyMode};

    fn diamond(pairs: &[(usize, usize)]) -> PcrpInstance {
        let d = Dag::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3).unwrap();
        PcrpInstance::new(d, pairs.iter().copied()).unwrap()
    }

    fn branches(k: usize) -> PcrpInstance {
        let t = k + 1;
        let arcs = (1..=k).flat_map(|a| [(0, a), (a, t)]);
        PcrpInstance::new(Dag::new(k + 2, arcs, 0, t).unwrap(), (1..=k).map(|a| (0, a))).unwrap()
    }

    fn chain(pairs: &[(usize, usize)]) -> PcrpInstance {
        let d = Dag::new(5, (0..4).map(|v| (v, v + 1)), 0, 4).unwrap();
        PcrpInstance::new(d, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn one_path() {
        assert_eq!(solve_1pcrp(&chain(&[(1, 3)])).unwrap().vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(solve_1pcrp(&diamond(&[])), None);
    }

    #[test]
    fn compat_examples() {
        let g = pair_compat_graph(&diamond(&[(0, 1), (0, 2)])).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        let g = pair_compat_graph(&chain(&[(1, 2), (3, 4), (0, 3)])).unwrap();
        assert_eq!(g.edge_count(), 3);
        let g = pair_compat_graph(&branches(3)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        assert_eq!(
            pair_compat_graph(&diamond(&[(1, 2)])),
            Err(CoverError::Infeasible { a: 1, b: 2 })
        );
    }

    #[test]
    fn two_paths_on_diamond() {
        let inst = diamond(&[]);
        let sol = solve_2pcrp(&inst).unwrap().unwrap();
        assert!(!sol.single_path);
        assert_eq!(sol.paths[0].vertices(), &[0, 1, 3]);
        assert_eq!(sol.paths[1].vertices(), &[0, 2, 3]);
        assert!(verify_solution(&inst, &sol.paths, VerifyMode::CoverAll).unwrap().is_valid());
    }

    #[test]
    fn three_branches_need_three() {
        assert_eq!(solve_2pcrp(&branches(3)).unwrap(), None);
    }

    #[test]
    fn chain_is_single_path_case() {
        let sol = solve_2pcrp(&chain(&[(1, 3)])).unwrap().unwrap();
        assert!(sol.single_path);
        assert_eq!(sol.paths[0], sol.paths[1]);
    }

    #[test]
    fn uncoverable_is_infeasible() {
        assert_eq!(solve_2pcrp(&diamond(&[(1, 2)])), Err(CoverError::Infeasible { a: 1, b: 2 }));
    }
}
