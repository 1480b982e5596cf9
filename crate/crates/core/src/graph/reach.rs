use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{Dag, Vertex};

/// Dense transitive closure. `reaches(u, v)` is true iff a directed path
/// from `u` to `v` exists; every vertex reaches itself.
///
/// Rows are filled in reverse topological order, so construction costs
/// `O(n * m / 64)` word operations. Both the descendant and the ancestor
/// relation are stored, which makes comparability a single row union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityIndex {
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    position: Vec<usize>,
}

impl ReachabilityIndex {
    pub fn new(dag: &Dag) -> Self {
        let n = dag.vertex_count();
        let order = dag.topo().order();
        let mut down = alloc::vec![FixedBitSet::with_capacity(n); n];
        for &u in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(u);
            for &v in dag.successors(u) {
                row.union_with(&down[v]);
            }
            down[u] = row;
        }
        let mut up = alloc::vec![FixedBitSet::with_capacity(n); n];
        for &v in order {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &u in dag.predecessors(v) {
                row.union_with(&up[u]);
            }
            up[v] = row;
        }
        ReachabilityIndex { down, up, position: dag.topo().positions().to_vec() }
    }

    pub fn vertex_count(&self) -> usize {
        self.down.len()
    }

    #[inline]
    pub fn reaches(&self, u: Vertex, v: Vertex) -> bool {
        self.down[u].contains(v)
    }

    #[inline]
    pub fn comparable(&self, u: Vertex, v: Vertex) -> bool {
        self.down[u].contains(v) || self.down[v].contains(u)
    }

    /// Vertices reachable from `u`, including `u`.
    pub fn descendants(&self, u: Vertex) -> &FixedBitSet {
        &self.down[u]
    }

    /// Vertices that reach `v`, including `v`.
    pub fn ancestors(&self, v: Vertex) -> &FixedBitSet {
        &self.up[v]
    }

    /// Vertices comparable with `u` (ancestors and descendants).
    pub fn comparable_set(&self, u: Vertex) -> FixedBitSet {
        let mut row = self.down[u].clone();
        row.union_with(&self.up[u]);
        row
    }

    /// Rank of `v` in the topological order of the DAG this index was built
    /// from.
    #[inline]
    pub fn topo_position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    /// True when the vertices, taken in the given order, are each reachable
    /// from the previous one (repeats allowed).
    pub fn is_ordered_chain(&self, seq: &[Vertex]) -> bool {
        seq.windows(2).all(|w| self.reaches(w[0], w[1]))
    }
}

/// If the vertices are pairwise comparable, returns them deduplicated and
/// sorted along reachability; otherwise `None`. In a DAG whose source reaches
/// everything and whose vertices all reach the sink, this holds exactly when
/// a single source-to-sink path contains the whole set.
pub fn is_chain(vertices: &[Vertex], reach: &ReachabilityIndex) -> Option<Vec<Vertex>> {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable_by_key(|&v| reach.topo_position(v));
    sorted.dedup();
    if reach.is_ordered_chain(&sorted) {
        Some(sorted)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn chain_reachability() {
        let dag = Dag::new(3, [(0, 1), (1, 2)], 0, 2).unwrap();
        let r = ReachabilityIndex::new(&dag);
        assert!(r.reaches(0, 2));
        assert!(!r.reaches(2, 0));
        assert!(r.reaches(1, 1));
    }

    #[test]
    fn diamond_branches_are_incomparable() {
        let dag = Dag::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3).unwrap();
        let r = ReachabilityIndex::new(&dag);
        assert!(!r.reaches(1, 2));
        assert!(!r.reaches(2, 1));
        assert!(!r.comparable(1, 2));
        assert_eq!(r.ancestors(3).ones().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(is_chain(&[1, 2], &r), None);
        assert_eq!(is_chain(&[3, 0, 1], &r), Some(vec![0, 1, 3]));
    }

    #[test]
    fn chain_sets() {
        let dag = Dag::new(3, [(0, 1), (1, 2)], 0, 2).unwrap();
        let r = ReachabilityIndex::new(&dag);
        assert_eq!(is_chain(&[0, 1, 2], &r), Some(vec![0, 1, 2]));
        assert_eq!(is_chain(&[2, 0, 2], &r), Some(vec![0, 2]));
        assert_eq!(is_chain(&[], &r), Some(vec![]));
    }
}
