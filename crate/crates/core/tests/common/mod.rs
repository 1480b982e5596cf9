#![allow(dead_code)]

use pcrp_core::{Dag, PcrpInstance};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random DAG on `0..n` with source 0 and sink `n - 1`. Arcs only go from
/// smaller to larger ids; fallback arcs make every vertex reachable from the
/// source and able to reach the sink.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Dag {
    assert!(n >= 2);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    for v in 1..n {
        if !arcs.iter().any(|&(_, b)| b == v) {
            arcs.push((rng.gen_range(0..v), v));
        }
    }
    for u in 0..n - 1 {
        if !arcs.iter().any(|&(a, _)| a == u) {
            arcs.push((u, rng.gen_range(u + 1..n)));
        }
    }
    Dag::new(n, arcs, 0, n - 1).unwrap()
}

/// Up to `count` distinct random pairs; with `coverable_only` every pair is
/// comparable.
pub fn random_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    density: f64,
    count: usize,
    coverable_only: bool,
) -> PcrpInstance {
    let dag = random_dag(rng, n, density);
    let base = PcrpInstance::new(dag, []).unwrap();
    let mut pairs = Vec::new();
    for _ in 0..count * 4 {
        if pairs.len() == count {
            break;
        }
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b || pairs.contains(&(a.min(b), a.max(b))) {
            continue;
        }
        if coverable_only && !base.reach().comparable(a, b) {
            continue;
        }
        pairs.push((a.min(b), a.max(b)));
    }
    base.with_pairs(pairs).unwrap()
}

/// Deterministic DAG from an upper-triangle arc mask (row-major over
/// `u < v`), with chain arcs added where a vertex lacks an in- or out-arc.
pub fn dag_from_mask(n: usize, mask: &[bool]) -> Dag {
    let mut arcs = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask[k] {
                arcs.push((u, v));
            }
            k += 1;
        }
    }
    for v in 1..n {
        if !arcs.iter().any(|&(_, b)| b == v) {
            arcs.push((v - 1, v));
        }
    }
    for u in 0..n - 1 {
        if !arcs.iter().any(|&(a, _)| a == u) {
            arcs.push((u, u + 1));
        }
    }
    Dag::new(n, arcs, 0, n - 1).unwrap()
}

/// Reachability by a fresh DFS from every vertex.
pub fn dfs_reach(dag: &Dag) -> Vec<Vec<bool>> {
    let n = dag.vertex_count();
    (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &v in dag.successors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen
        })
        .collect()
}

/// Largest antichain by exhaustive subset search.
pub fn brute_antichain(dag: &Dag) -> usize {
    let n = dag.vertex_count();
    let reach = dfs_reach(dag);
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| {
                (0..n).all(|v| u == v || s & (1 << u) == 0 || s & (1 << v) == 0 || !reach[u][v])
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}
