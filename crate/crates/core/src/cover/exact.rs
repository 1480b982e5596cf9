use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::CoverError;
use crate::graph::{enumerate_st_paths, is_chain, stitch_chain, StPath, Vertex};
use crate::instance::PcrpInstance;

/// Above this many distinct candidate paths the quadratic dominance filter
/// is skipped.
const DOMINANCE_LIMIT: usize = 4096;

/// Smallest set of at most `k_max` paths covering every vertex and pair,
/// found by enumerating all source-to-sink paths (at most `budget` of them)
/// and searching path subsets. `Ok(None)` when no such set exists, including
/// when some pair is uncoverable.
pub fn exact_minpcrp(
    inst: &PcrpInstance,
    k_max: usize,
    budget: usize,
) -> Result<Option<Vec<StPath>>, CoverError> {
    if inst.first_uncoverable().is_some() {
        return Ok(None);
    }
    let n = inst.dag().vertex_count();
    let pairs = inst.pairs();
    let items = n + pairs.len();
    let all = enumerate_st_paths(inst.dag(), budget)?;

    let mut cover: Vec<FixedBitSet> = all
        .iter()
        .map(|p| {
            let mut set = FixedBitSet::with_capacity(items);
            set.extend(p.vertices().iter().copied());
            for (k, q) in pairs.iter().enumerate() {
                if set.contains(q.first) && set.contains(q.second) {
                    set.insert(n + k);
                }
            }
            set
        })
        .collect();

    // Keep the first path of each coverage class, then drop dominated ones.
    let mut keep: Vec<usize> = (0..all.len()).collect();
    keep.sort_by(|&a, &b| cover[a].as_slice().cmp(cover[b].as_slice()).then(a.cmp(&b)));
    keep.dedup_by(|a, b| cover[*a] == cover[*b]);
    if keep.len() <= DOMINANCE_LIMIT {
        let dominated: Vec<bool> = keep
            .iter()
            .map(|&a| keep.iter().any(|&b| b != a && cover[a].is_subset(&cover[b])))
            .collect();
        keep = keep.iter().zip(&dominated).filter(|&(_, &d)| !d).map(|(&a, _)| a).collect();
    }
    keep.sort_unstable();
    let paths: Vec<StPath> = keep.iter().map(|&a| all[a].clone()).collect();
    cover = keep.iter().map(|&a| core::mem::take(&mut cover[a])).collect();

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); items];
    for (c, set) in cover.iter().enumerate() {
        for item in set.ones() {
            holders[item].push(c);
        }
    }
    if holders.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let max_gain = cover.iter().map(|s| s.count_ones(..)).max().unwrap_or(0);
    let search = Search { cover: &cover, holders: &holders, items, max_gain };
    for k in 1..=k_max {
        let mut chosen = Vec::new();
        if search.run(&FixedBitSet::with_capacity(items), &mut chosen, k) {
            return Ok(Some(chosen.iter().map(|&c| paths[c].clone()).collect()));
        }
    }
    Ok(None)
}

struct Search<'a> {
    cover: &'a [FixedBitSet],
    holders: &'a [Vec<usize>],
    items: usize,
    max_gain: usize,
}

impl Search<'_> {
    fn run(&self, covered: &FixedBitSet, chosen: &mut Vec<usize>, left: usize) -> bool {
        let missing = self.items - covered.count_ones(..);
        if missing == 0 {
            return true;
        }
        if left == 0 || self.max_gain * left < missing {
            return false;
        }
        // branch on the uncovered item with the fewest candidate paths
        let mut zeros = covered.clone();
        zeros.toggle_range(..);
        let item = zeros.ones().min_by_key(|&it| self.holders[it].len()).expect("something is missing");
        for &c in &self.holders[item] {
            let mut next = covered.clone();
            next.union_with(&self.cover[c]);
            chosen.push(c);
            if self.run(&next, chosen, left - 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Exact search that never enumerates paths: a set of vertices lies on one
/// path iff it is a chain, so `k` paths suffice iff the required pairs and
/// the vertices outside all pairs can be split into `k` groups whose vertex
/// unions are chains. That is a `k`-colouring of the graph joining two items
/// when some vertex of one is incomparable with some vertex of the other,
/// solved here by DSATUR-ordered backtracking. Vertices comparable with
/// everything never conflict and ride along on the first path.
///
/// `node_budget` caps the number of search nodes over all `k`.
pub fn exact_minpcrp_chains(
    inst: &PcrpInstance,
    k_max: usize,
    node_budget: u64,
) -> Result<Option<Vec<StPath>>, CoverError> {
    if inst.first_uncoverable().is_some() {
        return Ok(None);
    }
    let reach = inst.reach();
    let n = inst.dag().vertex_count();
    let universal: Vec<bool> = (0..n).map(|v| reach.comparable_set(v).count_ones(..) == n).collect();
    let mut in_pair = vec![false; n];
    let mut items: Vec<Vec<Vertex>> = Vec::new();
    for p in inst.pairs() {
        in_pair[p.first] = true;
        in_pair[p.second] = true;
        if !(universal[p.first] && universal[p.second]) {
            items.push(vec![p.first, p.second]);
        }
    }
    items.extend((0..n).filter(|&v| !in_pair[v] && !universal[v]).map(|v| vec![v]));

    let m = items.len();
    let mut conflict = vec![FixedBitSet::with_capacity(m); m];
    for a in 0..m {
        for b in a + 1..m {
            let clash = items[a].iter().any(|&u| items[b].iter().any(|&w| !reach.comparable(u, w)));
            if clash {
                conflict[a].insert(b);
                conflict[b].insert(a);
            }
        }
    }

    let mut nodes = 0u64;
    for k in 1..=k_max {
        let mut colouring = Colouring::new(&conflict, k);
        match colouring.solve(&mut nodes, node_budget) {
            Some(true) => {
                let mut groups: Vec<Vec<Vertex>> = vec![Vec::new(); k];
                groups[0].extend((0..n).filter(|&v| universal[v]));
                for (item, &c) in items.iter().zip(&colouring.colour) {
                    groups[c].extend(item.iter().copied());
                }
                let mut paths = Vec::with_capacity(k);
                for g in groups {
                    let chain = is_chain(&g, reach).expect("colour classes span chains");
                    paths.push(stitch_chain(inst.dag(), reach, &chain)?);
                }
                return Ok(Some(paths));
            }
            Some(false) => {}
            None => return Err(CoverError::SearchBudgetExceeded { limit: node_budget }),
        }
    }
    Ok(None)
}

const UNCOLOURED: usize = usize::MAX;

struct Colouring<'a> {
    adj: &'a [FixedBitSet],
    k: usize,
    colour: Vec<usize>,
    /// forbidden[v][c]: number of neighbours of v coloured c
    forbidden: Vec<Vec<u32>>,
}

impl<'a> Colouring<'a> {
    fn new(adj: &'a [FixedBitSet], k: usize) -> Self {
        let m = adj.len();
        Colouring { adj, k, colour: vec![UNCOLOURED; m], forbidden: vec![vec![0; k]; m] }
    }

    /// `Some(found)`, or `None` when the node budget runs out.
    fn solve(&mut self, nodes: &mut u64, budget: u64) -> Option<bool> {
        self.step(0, 0, nodes, budget)
    }

    fn step(&mut self, done: usize, used: usize, nodes: &mut u64, budget: u64) -> Option<bool> {
        if done == self.colour.len() {
            return Some(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        // most saturated vertex, then highest degree, then lowest index
        let v = (0..self.colour.len())
            .filter(|&v| self.colour[v] == UNCOLOURED)
            .max_by_key(|&v| {
                let sat = self.forbidden[v].iter().filter(|&&c| c > 0).count();
                (sat, self.adj[v].count_ones(..), core::cmp::Reverse(v))
            })
            .expect("an uncoloured vertex remains");
        // a fresh colour is interchangeable with any other fresh colour
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[v][c] > 0 {
                continue;
            }
            self.paint(v, c, true);
            let found = self.step(done + 1, used.max(c + 1), nodes, budget);
            if found != Some(false) {
                if found.is_none() {
                    self.paint(v, c, false);
                }
                return found;
            }
            self.paint(v, c, false);
        }
        Some(false)
    }

    fn paint(&mut self, v: usize, c: usize, on: bool) {
        self.colour[v] = if on { c } else { UNCOLOURED };
        for w in self.adj[v].ones() {
            if on {
                self.forbidden[w][c] += 1;
            } else {
                self.forbidden[w][c] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Dag;
    use crate::instance::{verify_solution, VerifyMode};

    fn branches(k: usize) -> PcrpInstance {
        let t = k + 1;
        let arcs = (1..=k).flat_map(|a| [(0, a), (a, t)]);
        PcrpInstance::new(Dag::new(k + 2, arcs, 0, t).unwrap(), (1..=k).map(|a| (0, a))).unwrap()
    }

    #[test]
    fn chain_needs_one() {
        let d = Dag::new(4, (0..3).map(|v| (v, v + 1)), 0, 3).unwrap();
        let inst = PcrpInstance::new(d, [(1, 2)]).unwrap();
        assert_eq!(exact_minpcrp(&inst, 6, 100).unwrap().unwrap().len(), 1);
        assert_eq!(exact_minpcrp_chains(&inst, 6, 100).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn branches_need_three() {
        let inst = branches(3);
        for sol in [exact_minpcrp(&inst, 6, 100).unwrap(), exact_minpcrp_chains(&inst, 6, 1000).unwrap()] {
            let sol = sol.unwrap();
            assert_eq!(sol.len(), 3);
            assert!(verify_solution(&inst, &sol, VerifyMode::CoverAll).unwrap().is_valid());
        }
        assert_eq!(exact_minpcrp(&inst, 2, 100).unwrap(), None);
        assert_eq!(exact_minpcrp_chains(&inst, 2, 1000).unwrap(), None);
    }

    #[test]
    fn uncoverable_pair() {
        let d = Dag::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3).unwrap();
        let inst = PcrpInstance::new(d, [(1, 2)]).unwrap();
        assert_eq!(exact_minpcrp(&inst, 6, 100).unwrap(), None);
        assert_eq!(exact_minpcrp_chains(&inst, 6, 100).unwrap(), None);
    }

    #[test]
    fn budgets() {
        let inst = branches(4);
        assert!(matches!(exact_minpcrp(&inst, 6, 3), Err(CoverError::Graph(_))));
        assert_eq!(
            exact_minpcrp_chains(&inst, 6, 2),
            Err(CoverError::SearchBudgetExceeded { limit: 2 })
        );
    }
}
