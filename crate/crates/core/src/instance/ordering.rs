use alloc::vec::Vec;

use super::overlap::classify_oriented;
use super::{PcrpInstance, RequiredPair};
use crate::graph::Vertex;

/// The coverable pairs of an instance ranked for the dynamic program.
///
/// Rank 0 is the fictitious pair whose second vertex is the source; real
/// pairs occupy ranks `1..=len()`. Pairs are sorted by the topological rank
/// of their second vertex, ties by the topological rank of their first
/// vertex in *descending* order (so a pair nested in another with the same
/// second vertex comes first), then by input position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOrdering {
    source: Vertex,
    ranked: Vec<RequiredPair>,
    input_index: Vec<usize>,
}

impl PairOrdering {
    /// Number of real pairs.
    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }

    /// The pair at `rank`, or `None` for the fictitious rank 0.
    pub fn pair(&self, rank: usize) -> Option<RequiredPair> {
        rank.checked_sub(1).map(|r| self.ranked[r])
    }

    /// Second vertex of the pair at `rank`; the source for rank 0.
    pub fn second(&self, rank: usize) -> Vertex {
        self.pair(rank).map_or(self.source, |p| p.second)
    }

    /// Position in `inst.pairs()` of the pair at `rank` (`rank >= 1`).
    pub fn input_index(&self, rank: usize) -> usize {
        self.input_index[rank - 1]
    }

    /// Rank of the pair at position `index` of `inst.pairs()`, if coverable.
    pub fn rank_of_input(&self, index: usize) -> Option<usize> {
        self.input_index.iter().position(|&k| k == index).map(|r| r + 1)
    }

    /// Real pairs in rank order.
    pub fn pairs(&self) -> &[RequiredPair] {
        &self.ranked
    }
}

/// Ranks the coverable pairs of `inst`; uncoverable pairs are left out.
pub fn order_pairs(inst: &PcrpInstance) -> PairOrdering {
    let reach = inst.reach();
    let mut idx: Vec<usize> =
        (0..inst.pairs().len()).filter(|&k| inst.is_coverable(inst.pairs()[k])).collect();
    idx.sort_by_key(|&k| {
        let p = inst.pairs()[k];
        (reach.topo_position(p.second), core::cmp::Reverse(reach.topo_position(p.first)), k)
    });
    PairOrdering {
        source: inst.dag().source(),
        ranked: idx.iter().map(|&k| inst.pairs()[k]).collect(),
        input_index: idx,
    }
}

/// `OP` set of the pair at `rank`: its first vertex plus every vertex of an
/// overlapping pair that reaches its second vertex. The second vertex itself
/// is the endpoint of every DP state of this pair and is left out. Sorted by
/// topological rank; empty for rank 0.
pub fn op_set(rank: usize, inst: &PcrpInstance, ordering: &PairOrdering) -> Vec<Vertex> {
    let Some(me) = ordering.pair(rank) else {
        return Vec::new();
    };
    let reach = inst.reach();
    let mut out = alloc::vec![me.first];
    for (r, &other) in ordering.pairs().iter().enumerate() {
        if r + 1 == rank || !classify_oriented(me, other, reach).overlaps() {
            continue;
        }
        for v in [other.first, other.second] {
            if v != me.second && reach.reaches(v, me.second) {
                out.push(v);
            }
        }
    }
    out.sort_unstable_by_key(|&v| reach.topo_position(v));
    out.dedup();
    out
}
