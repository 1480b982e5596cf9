use alloc::vec;
use alloc::vec::Vec;

use super::{ReductionError, SimpleGraph};

/// Largest graph [`brute_3coloring`] accepts.
pub const COLORING_LIMIT: usize = 16;
/// Largest graph [`brute_max_clique`] accepts.
pub const CLIQUE_LIMIT: usize = 24;

/// A proper 3-colouring if one exists (backtracking in vertex order, lowest
/// colour first, so the result is the lexicographically smallest).
pub fn brute_3coloring(g: &SimpleGraph) -> Result<Option<Vec<u8>>, ReductionError> {
    let n = g.vertex_count();
    if n > COLORING_LIMIT {
        return Err(ReductionError::SizeLimitExceeded { found: n, limit: COLORING_LIMIT });
    }
    let mut colouring = vec![0u8; n];
    Ok(paint(g, 0, &mut colouring).then_some(colouring))
}

fn paint(g: &SimpleGraph, v: usize, colouring: &mut [u8]) -> bool {
    if v == colouring.len() {
        return true;
    }
    for c in 0..3 {
        if g.neighbours(v).filter(|&u| u < v).all(|u| colouring[u] != c) {
            colouring[v] = c;
            if paint(g, v + 1, colouring) {
                return true;
            }
        }
    }
    false
}

/// A maximum clique, ascending, by branch and bound with a greedy-colouring
/// bound.
pub fn brute_max_clique(g: &SimpleGraph) -> Result<Vec<usize>, ReductionError> {
    let n = g.vertex_count();
    if n > CLIQUE_LIMIT {
        return Err(ReductionError::SizeLimitExceeded { found: n, limit: CLIQUE_LIMIT });
    }
    let adj: Vec<u32> = (0..n).map(|u| g.neighbours(u).fold(0, |m, v| m | (1 << v))).collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    expand(&adj, &mut current, all, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn expand(adj: &[u32], current: &mut Vec<usize>, mut candidates: u32, best: &mut Vec<usize>) {
    // greedy colouring of the candidates: order[k] gets colour bound[k]
    let mut order = Vec::new();
    let mut bound = Vec::new();
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncoloured &= !(1 << v);
            order.push(v);
            bound.push(colour);
        }
    }
    for k in (0..order.len()).rev() {
        if current.len() + bound[k] <= best.len() {
            return;
        }
        let v = order[k];
        current.push(v);
        let next = candidates & adj[v];
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, current, next, best);
        }
        current.pop();
        candidates &= !(1 << v);
    }
}
