use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{stitch_chain, Dag, ReachabilityIndex, StPath, Vertex};

const FREE: usize = usize::MAX;

/// Hopcroft-Karp on a bipartite graph with `adj.len()` left vertices and
/// `right` right vertices. Returns `mate_left`, where `mate_left[u]` is the
/// right partner of `u` or `usize::MAX`.
fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Vec<usize> {
    let left = adj.len();
    let mut mate_l = vec![FREE; left];
    let mut mate_r = vec![FREE; right];
    let mut dist = vec![0usize; left];
    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..left {
            if mate_l[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                match mate_r[w] {
                    FREE => found = true,
                    x if dist[x] == usize::MAX => {
                        dist[x] = dist[u] + 1;
                        queue.push_back(x);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return mate_l;
        }
        let mut cursor = vec![0usize; left];
        for u in 0..left {
            if mate_l[u] == FREE {
                augment(u, adj, &mut mate_l, &mut mate_r, &mut dist, &mut cursor);
            }
        }
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    while cursor[u] < adj[u].len() {
        let w = adj[u][cursor[u]];
        cursor[u] += 1;
        let next = mate_r[w];
        let ok = next == FREE
            || (dist[next] == dist[u] + 1 && augment(next, adj, mate_l, mate_r, dist, cursor));
        if ok {
            mate_l[u] = w;
            mate_r[w] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Minimum number of chains (sets totally ordered by reachability) covering
/// `vertices`. Each chain is sorted along reachability; chains are ordered
/// by the topological rank of their first vertex.
///
/// By Dilworth's theorem the count equals the largest antichain among
/// `vertices`; it is computed as `|vertices|` minus a maximum matching in the
/// bipartite graph whose edges are the reachability relation.
pub fn min_chain_cover(vertices: &[Vertex], reach: &ReachabilityIndex) -> Vec<Vec<Vertex>> {
    let mut vs = vertices.to_vec();
    vs.sort_unstable_by_key(|&v| reach.topo_position(v));
    vs.dedup();
    let adj: Vec<Vec<usize>> = vs
        .iter()
        .enumerate()
        .map(|(a, &u)| (a + 1..vs.len()).filter(|&b| reach.reaches(u, vs[b])).collect())
        .collect();
    let mate = hopcroft_karp(&adj, vs.len());
    let mut has_pred = vec![false; vs.len()];
    for &w in mate.iter().filter(|&&w| w != FREE) {
        has_pred[w] = true;
    }
    let mut chains = Vec::new();
    for start in (0..vs.len()).filter(|&a| !has_pred[a]) {
        let mut chain = vec![vs[start]];
        let mut cur = start;
        while mate[cur] != FREE {
            cur = mate[cur];
            chain.push(vs[cur]);
        }
        chains.push(chain);
    }
    chains
}

/// Minimum set of source-to-sink paths covering every vertex.
pub fn min_path_cover(dag: &Dag) -> Vec<StPath> {
    let reach = ReachabilityIndex::new(dag);
    let all: Vec<Vertex> = (0..dag.vertex_count()).collect();
    min_chain_cover(&all, &reach)
        .iter()
        .map(|c| stitch_chain(dag, &reach, c).expect("chains are stitchable in an st-connected DAG"))
        .collect()
}
