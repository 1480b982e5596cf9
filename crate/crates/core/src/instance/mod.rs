//! Problem instances: a DAG together with a list of required pairs.
//!
//! Pairs are normalised at construction: a coverable pair is oriented so its
//! first vertex reaches its second, an uncoverable pair is stored as
//! `(min, max)`, and duplicates (as unordered pairs) are merged.

use alloc::vec::Vec;

use log::warn;
use thiserror::Error;

use crate::graph::{Dag, GraphError, PathDefect, ReachabilityIndex, Vertex};

mod ordering;
mod overlap;
mod verify;

pub use ordering::{op_set, order_pairs, PairOrdering};
pub use overlap::{
    classify_overlap, is_nested_in, max_overlap_degree, overlap_degree, OverlapKind, OverlapSummary,
    PairRole,
};
pub use verify::{verify_solution, VerifyMode, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("self-pair ({0}, {0})")]
    SelfPair(Vertex),
    #[error("pair ({a}, {b}) names a vertex outside 0..{count}")]
    PairOutOfRange { a: Vertex, b: Vertex, count: usize },
    #[error("uncoverable pair ({a}, {b})")]
    NotCoverable { a: Vertex, b: Vertex },
    #[error("path {index} is malformed: {defect}")]
    MalformedPath { index: usize, defect: PathDefect },
}

/// Two distinct vertices that must share a path. After normalisation
/// `first` reaches `second` whenever the pair is coverable at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RequiredPair {
    pub first: Vertex,
    pub second: Vertex,
}

impl RequiredPair {
    pub fn new(first: Vertex, second: Vertex) -> Self {
        RequiredPair { first, second }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.first == v || self.second == v
    }
}

impl core::fmt::Display for RequiredPair {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// True iff some source-to-sink path can contain both vertices of the pair.
pub fn coverable(pair: RequiredPair, reach: &ReachabilityIndex) -> bool {
    reach.comparable(pair.first, pair.second)
}

/// A validated DAG plus its required pairs, with the reachability index
/// cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcrpInstance {
    dag: Dag,
    reach: ReachabilityIndex,
    pairs: Vec<RequiredPair>,
}

impl PcrpInstance {
    /// Validates source/sink connectivity and the pairs, orients and
    /// deduplicates them. Input order of first occurrences is preserved.
    pub fn new<I>(dag: Dag, pairs: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        dag.check_st_connectivity()?;
        let reach = ReachabilityIndex::new(&dag);
        let n = dag.vertex_count();
        let mut normalised: Vec<RequiredPair> = Vec::new();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(InstanceError::PairOutOfRange { a, b, count: n });
            }
            if a == b {
                return Err(InstanceError::SelfPair(a));
            }
            let pair = orient(a, b, &reach);
            if normalised.contains(&pair) {
                warn!("duplicate required pair {pair} merged");
                continue;
            }
            normalised.push(pair);
        }
        Ok(PcrpInstance { dag, reach, pairs: normalised })
    }

    /// Same graph, different pair list (normalised like [`PcrpInstance::new`]).
    pub fn with_pairs<I>(&self, pairs: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut out = PcrpInstance { dag: self.dag.clone(), reach: self.reach.clone(), pairs: Vec::new() };
        let n = self.dag.vertex_count();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(InstanceError::PairOutOfRange { a, b, count: n });
            }
            if a == b {
                return Err(InstanceError::SelfPair(a));
            }
            let pair = orient(a, b, &out.reach);
            if !out.pairs.contains(&pair) {
                out.pairs.push(pair);
            }
        }
        Ok(out)
    }

    pub fn dag(&self) -> &Dag {
        &self.dag
    }

    pub fn reach(&self) -> &ReachabilityIndex {
        &self.reach
    }

    pub fn pairs(&self) -> &[RequiredPair] {
        &self.pairs
    }

    pub fn is_coverable(&self, pair: RequiredPair) -> bool {
        coverable(pair, &self.reach)
    }

    /// First uncoverable pair, if any.
    pub fn first_uncoverable(&self) -> Option<RequiredPair> {
        self.pairs.iter().copied().find(|&p| !self.is_coverable(p))
    }

    /// Coverable pairs in input order.
    pub fn coverable_pairs(&self) -> Vec<RequiredPair> {
        self.pairs.iter().copied().filter(|&p| self.is_coverable(p)).collect()
    }

    /// Returns `Err(NotCoverable)` for the first uncoverable pair.
    pub fn require_coverable(&self) -> Result<(), InstanceError> {
        match self.first_uncoverable() {
            Some(p) => Err(InstanceError::NotCoverable { a: p.first, b: p.second }),
            None => Ok(()),
        }
    }
}

fn orient(a: Vertex, b: Vertex, reach: &ReachabilityIndex) -> RequiredPair {
    if reach.reaches(a, b) {
        RequiredPair::new(a, b)
    } else if reach.reaches(b, a) {
        RequiredPair::new(b, a)
    } else {
        RequiredPair::new(a.min(b), a.max(b))
    }
}

/// Adds `(source, v)` for every vertex other than the source and sink that
/// belongs to no required pair, so that covering all pairs also covers all
/// vertices. Idempotent.
pub fn augment_trivial_pairs(inst: &PcrpInstance) -> PcrpInstance {
    let dag = inst.dag();
    let n = dag.vertex_count();
    let mut in_pair = alloc::vec![false; n];
    for p in inst.pairs() {
        in_pair[p.first] = true;
        in_pair[p.second] = true;
    }
    let mut out = inst.clone();
    for (v, &paired) in in_pair.iter().enumerate() {
        if !paired && v != dag.source() && v != dag.sink() {
            out.pairs.push(RequiredPair::new(dag.source(), v));
        }
    }
    out
}
