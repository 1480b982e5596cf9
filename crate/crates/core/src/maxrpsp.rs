//! Single-path maximisation: find one source-to-sink path covering as many
//! required pairs as possible.
//!
//! [`max_rpsp_dp`] is a dynamic program over states `(i, S)` where `i` ranks
//! a pair (see [`order_pairs`]) and `S` is a subset of `OP(i)` (see
//! [`op_set`]). A state stands for a path prefix ending at the second vertex
//! of pair `i` that passes through exactly the vertices of `S` among `OP(i)`
//! and covers pair `i`. The prefix ending at a state is glued to a shorter
//! prefix ending at pair `j` when the two subsets agree on `OP(i) ∩ OP(j)`,
//! and every pair nested in `i` (or `i` itself) whose second vertex appears
//! on the new segment and whose first vertex is in `S` is credited there.
//!
//! Only states reachable from the base state are stored, and a prefix is
//! always credited for the pair it ends at, so the table size is bounded by
//! `Σ 2^|OP(i)|`, which is at most `|R| · 2^(2p+1)` for maximum overlapping
//! degree `p`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use log::warn;
use thiserror::Error;

use crate::graph::{stitch_chain, GraphError, ReachabilityIndex, StPath, StPaths, Vertex};
use crate::instance::{
    is_nested_in, max_overlap_degree, op_set, order_pairs, InstanceError, PairOrdering, PcrpInstance,
    RequiredPair,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaxRpspError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("OP set of pair {pair} has {size} vertices, above the limit of {limit}")]
    ParameterTooLarge { pair: RequiredPair, size: usize, limit: usize },
}

/// Tuning for [`max_rpsp_dp_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpConfig {
    /// Largest `|OP(i)|` accepted. The per-pair working table has
    /// `2^|OP(i)|` entries. Values above 30 are clamped.
    pub max_op_size: usize,
}

impl Default for DpConfig {
    fn default() -> Self {
        DpConfig { max_op_size: 20 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Coverable pairs taking part in the program.
    pub pair_count: usize,
    /// Maximum overlapping degree `p` over those pairs.
    pub max_overlap_degree: usize,
    /// Largest `|OP(i)|`.
    pub max_op_size: usize,
    /// Materialised states, including the base state.
    pub state_count: usize,
    /// `1 + Σ 2^|OP(i)|`, the bound `state_count` is checked against.
    pub state_bound: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpOutcome {
    /// Maximum number of required pairs on one path.
    pub count: usize,
    /// A path achieving `count`.
    pub witness: StPath,
    /// The instance pairs the witness covers, in input order.
    pub covered: Vec<RequiredPair>,
    pub stats: DpStats,
}

/// True iff `s` and `s_prime` contain the same vertices of
/// `op_i ∩ op_j`.
pub fn agreement(op_i: &[Vertex], s: &[Vertex], op_j: &[Vertex], s_prime: &[Vertex]) -> bool {
    op_i.iter()
        .filter(|v| op_j.contains(v))
        .all(|v| s.contains(v) == s_prime.contains(v))
}

/// Ranks of the pairs credited when the prefix described by `s_hat` is
/// glued to the one described by `s_prime_hat`: pair `i` and every pair
/// nested in it whose first vertex is in `s_hat` and whose second vertex is
/// in `s_hat \ s_prime_hat`.
///
/// Both sets are given with their prefix endpoint included (the second
/// vertex of pair `i` in `s_hat`, that of the predecessor in
/// `s_prime_hat`), which is how the program treats the endpoint as always
/// being on the path.
pub fn ov(
    inst: &PcrpInstance,
    ordering: &PairOrdering,
    i: usize,
    s_hat: &[Vertex],
    s_prime_hat: &[Vertex],
) -> Vec<usize> {
    let Some(me) = ordering.pair(i) else {
        return Vec::new();
    };
    let fresh = |v: Vertex| s_hat.contains(&v) && !s_prime_hat.contains(&v);
    (1..=ordering.len())
        .filter(|&h| {
            let p = ordering.pair(h).expect("real rank");
            (h == i || is_nested_in(p, me, inst.reach())) && s_hat.contains(&p.first) && fresh(p.second)
        })
        .collect()
}

/// True iff `{from} ∪ (s \ s_prime) ∪ {to}` is a chain with `from` first and
/// `to` last, i.e. some path runs from `from` through the new vertices to
/// `to`.
pub fn feasible_extension(
    from: Vertex,
    to: Vertex,
    s: &[Vertex],
    s_prime: &[Vertex],
    reach: &ReachabilityIndex,
) -> bool {
    if !reach.reaches(from, to) {
        return false;
    }
    let mut fresh: Vec<Vertex> = s.iter().copied().filter(|v| !s_prime.contains(v)).collect();
    if fresh.iter().any(|&x| !reach.reaches(from, x) || !reach.reaches(x, to)) {
        return false;
    }
    fresh.sort_unstable_by_key(|&v| reach.topo_position(v));
    fresh.dedup();
    reach.is_ordered_chain(&fresh)
}

/// Exhaustive oracle: the best path among all source-to-sink paths, failing
/// once more than `budget` paths exist. Ties go to the first path in
/// enumeration order.
pub fn max_rpsp_bruteforce(inst: &PcrpInstance, budget: usize) -> Result<(usize, StPath), GraphError> {
    let n = inst.dag().vertex_count();
    let mut best: Option<(usize, StPath)> = None;
    let mut on_path = FixedBitSet::with_capacity(n);
    for (seen, path) in StPaths::new(inst.dag()).enumerate() {
        if seen == budget {
            return Err(GraphError::PathBudgetExceeded { limit: budget });
        }
        on_path.clear();
        on_path.extend(path.vertices().iter().copied());
        let count =
            inst.pairs().iter().filter(|p| on_path.contains(p.first) && on_path.contains(p.second)).count();
        if best.as_ref().is_none_or(|(c, _)| count > *c) {
            best = Some((count, path));
        }
    }
    Ok(best.expect("a validated instance has at least one path"))
}

/// [`max_rpsp_dp_with`] under the default configuration.
pub fn max_rpsp_dp(inst: &PcrpInstance) -> Result<DpOutcome, MaxRpspError> {
    max_rpsp_dp_with(inst, DpConfig::default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cand {
    value: u32,
    j: u32,
    mask: u32,
}

impl Cand {
    const NONE: Cand = Cand { value: u32::MAX, j: u32::MAX, mask: u32::MAX };

    fn is_none(&self) -> bool {
        self.value == u32::MAX
    }

    /// Larger value wins, then smaller predecessor rank, then smaller mask.
    fn beats(&self, other: &Cand) -> bool {
        other.is_none()
            || self.value > other.value
            || (self.value == other.value && (self.j, self.mask) < (other.j, other.mask))
    }
}

#[derive(Debug, Clone, Copy)]
struct State {
    mask: u32,
    value: u32,
    back_j: u32,
    back_mask: u32,
}

/// Per-pair data for one rank.
struct Slot {
    second: Vertex,
    op: Vec<Vertex>,
    /// Sparse states sorted by mask.
    states: Vec<State>,
    /// Best state by (value desc, mask asc).
    best: Option<(u32, u32)>,
}

/// Solves the maximisation problem exactly. Uncoverable pairs can never be
/// covered and are ignored with a warning.
pub fn max_rpsp_dp_with(inst: &PcrpInstance, config: DpConfig) -> Result<DpOutcome, MaxRpspError> {
    if let Some(p) = inst.first_uncoverable() {
        let skipped = inst.pairs().len() - inst.coverable_pairs().len();
        warn!("ignoring {skipped} uncoverable pair(s), the first being {p}");
    }
    let reach = inst.reach();
    let ordering = order_pairs(inst);
    let m = ordering.len();
    let limit = config.max_op_size.min(30);

    let mut slots = Vec::with_capacity(m + 1);
    slots.push(Slot {
        second: inst.dag().source(),
        op: Vec::new(),
        states: vec![State { mask: 0, value: 0, back_j: 0, back_mask: 0 }],
        best: Some((0, 0)),
    });
    let mut state_bound: u128 = 1;
    let mut widest = 0;
    for i in 1..=m {
        let op = op_set(i, inst, &ordering);
        if op.len() > limit {
            return Err(MaxRpspError::ParameterTooLarge {
                pair: ordering.pair(i).expect("real rank"),
                size: op.len(),
                limit,
            });
        }
        widest = widest.max(op.len());
        state_bound += 1u128 << op.len();
        slots.push(Slot { second: ordering.second(i), op, states: Vec::new(), best: None });
    }

    let n = inst.dag().vertex_count();
    let mut bit_of = vec![u32::MAX; n];
    let mut table = vec![Cand::NONE; 1usize << widest];
    let mut touched: Vec<u32> = Vec::new();
    let mut chain_ok = vec![false; 1usize << widest];

    for i in 1..=m {
        let me = ordering.pair(i).expect("real rank");
        let (done, rest) = slots.split_at_mut(i);
        let cur = &mut rest[0];
        let k = cur.op.len();
        let end_bit = 1u32 << k;
        for (b, &v) in cur.op.iter().enumerate() {
            bit_of[v] = b as u32;
        }
        let v1_bit = 1u32 << bit_of[me.first];

        // chain_ok[F]: the vertices of F are pairwise comparable
        let comp: Vec<u32> = cur
            .op
            .iter()
            .map(|&u| {
                cur.op
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| reach.comparable(u, v))
                    .fold(0u32, |acc, (b, _)| acc | (1 << b))
            })
            .collect();
        chain_ok[0] = true;
        for f in 1..(1usize << k) {
            let low = f.trailing_zeros() as usize;
            let rest_mask = f & (f - 1);
            chain_ok[f] = chain_ok[rest_mask] && (comp[low] as usize & rest_mask) == rest_mask;
        }

        // pairs credited at this rank: (first-vertex bit, second-vertex bit
        // or the endpoint bit)
        let credit: Vec<(u32, u32)> = (1..=i)
            .filter_map(|h| {
                let p = ordering.pair(h).expect("real rank");
                if h != i && !is_nested_in(p, me, reach) {
                    return None;
                }
                let second =
                    if p.second == cur.second { end_bit } else { 1u32 << bit_of[p.second] };
                Some((1u32 << bit_of[p.first], second))
            })
            .collect();
        let ov_count = |s: u32, seg: u32| -> u32 {
            credit.iter().filter(|&&(a, b)| s & a != 0 && seg & b != 0).count() as u32
        };

        let mut apply = |key: u32, free: u32, v1_forced: bool, v2j_bit: u32, endpoint_new: bool, base: Cand| {
            let (optional, forced) = if v1_forced { (free & !v1_bit, v1_bit) } else { (free, 0) };
            let mut sub = optional;
            loop {
                let f = sub | forced;
                if chain_ok[f as usize] {
                    let s = key | f;
                    let seg = (f & !v2j_bit) | if endpoint_new { end_bit } else { 0 };
                    let c = Cand { value: base.value + ov_count(s, seg), j: base.j, mask: base.mask };
                    let slot = &mut table[s as usize];
                    if slot.is_none() {
                        touched.push(s);
                    }
                    if c.beats(slot) {
                        *slot = c;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & optional;
            }
        };

        let mut far: BTreeMap<(u32, bool), Cand> = BTreeMap::new();
        for (j, prev) in done.iter().enumerate() {
            let v2j = prev.second;
            if !reach.reaches(v2j, cur.second) {
                continue;
            }
            if j > 0 && is_nested_in(ordering.pair(j).expect("real rank"), me, reach) {
                continue;
            }
            if prev.states.is_empty() {
                continue;
            }
            // map of j's bits onto i's bits
            let mut common = 0u32;
            let mut j_to_i: Vec<(u32, u32)> = Vec::new();
            for (b, &v) in prev.op.iter().enumerate() {
                if bit_of[v] != u32::MAX {
                    common |= 1 << bit_of[v];
                    j_to_i.push((1 << b, 1 << bit_of[v]));
                }
            }
            let free = cur
                .op
                .iter()
                .enumerate()
                .filter(|&(_, &v)| reach.reaches(v2j, v))
                .fold(0u32, |acc, (b, _)| acc | (1 << b))
                & !common;
            let v1_common = common & v1_bit != 0;
            if !v1_common && free & v1_bit == 0 {
                continue;
            }
            let v2j_bit = if bit_of[v2j] != u32::MAX { 1u32 << bit_of[v2j] } else { 0 };
            let endpoint_new = v2j != cur.second;

            if common == 0 && v2j_bit == 0 {
                let (value, mask) = prev.best.expect("non-empty states");
                let c = Cand { value, j: j as u32, mask };
                let entry = far.entry((free, endpoint_new)).or_insert(Cand::NONE);
                if c.beats(entry) {
                    *entry = c;
                }
                continue;
            }

            let mut keys: BTreeMap<u32, Cand> = BTreeMap::new();
            for st in &prev.states {
                let key = j_to_i.iter().filter(|&&(jb, _)| st.mask & jb != 0).fold(0, |acc, &(_, ib)| acc | ib);
                if v1_common && key & v1_bit == 0 {
                    continue;
                }
                let c = Cand { value: st.value, j: j as u32, mask: st.mask };
                let entry = keys.entry(key).or_insert(Cand::NONE);
                if c.beats(entry) {
                    *entry = c;
                }
            }
            for (&key, &base) in &keys {
                apply(key, free, !v1_common, v2j_bit, endpoint_new, base);
            }
        }
        for (&(free, endpoint_new), &base) in &far {
            apply(0, free, true, 0, endpoint_new, base);
        }

        touched.sort_unstable();
        cur.states = touched
            .iter()
            .map(|&s| {
                let c = table[s as usize];
                table[s as usize] = Cand::NONE;
                State { mask: s, value: c.value, back_j: c.j, back_mask: c.mask }
            })
            .collect();
        touched.clear();
        cur.best = cur
            .states
            .iter()
            .fold(None, |acc: Option<(u32, u32)>, st| match acc {
                Some((v, _)) if v >= st.value => acc,
                _ => Some((st.value, st.mask)),
            });
        for &v in &cur.op {
            bit_of[v] = u32::MAX;
        }
    }

    let state_count: usize = slots.iter().map(|s| s.states.len()).sum();
    assert!(state_count as u128 <= state_bound, "state space bound violated");

    // best final state: value desc, rank asc, mask asc
    let mut end = (0usize, 0u32, 0u32);
    for (i, slot) in slots.iter().enumerate() {
        if let Some((v, mask)) = slot.best {
            if v > end.1 {
                end = (i, v, mask);
            }
        }
    }
    let (mut i, count, mut mask) = end;
    let mut segments: Vec<Vec<Vertex>> = Vec::new();
    while i != 0 {
        let slot = &slots[i];
        let st = slot.states[slot.states.binary_search_by_key(&mask, |s| s.mask).expect("state on trace")];
        let j = st.back_j as usize;
        let prev = &slots[j];
        let mut seg: Vec<Vertex> = slot
            .op
            .iter()
            .enumerate()
            .filter(|&(b, &v)| mask & (1 << b) != 0 && !prev.op.contains(&v) && v != prev.second)
            .map(|(_, &v)| v)
            .collect();
        if slot.second != prev.second {
            seg.push(slot.second);
        }
        segments.push(seg);
        i = j;
        mask = st.back_mask;
    }
    let anchors: Vec<Vertex> = segments.into_iter().rev().flatten().collect();
    let witness = stitch_chain(inst.dag(), reach, &anchors)?;
    let covered: Vec<RequiredPair> =
        inst.pairs().iter().copied().filter(|p| witness.contains(p.first) && witness.contains(p.second)).collect();
    assert!(covered.len() >= count as usize, "witness covers fewer pairs than claimed");

    let coverable = inst.with_pairs(ordering.pairs().iter().map(|p| (p.first, p.second)))?;
    let stats = DpStats {
        pair_count: m,
        max_overlap_degree: max_overlap_degree(&coverable)?,
        max_op_size: widest,
        state_count,
        state_bound,
    };
    Ok(DpOutcome { count: count as usize, witness, covered, stats })
}
