//! Seeded instance and graph generators.

use pcrp_core::instance::OverlapSummary;
use pcrp_core::reductions::SimpleGraph;
use pcrp_core::{Dag, PcrpInstance, RequiredPair, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parameters of [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    /// Vertex count, source and sink included (at least 2).
    pub vertices: usize,
    /// Probability of each forward arc between distinct layers.
    pub density: f64,
    /// Requested number of pairs. Fewer are produced when the graph or the
    /// overlap limit does not admit them.
    pub pairs: usize,
    /// Reject pairs that would push the maximum overlap degree above this.
    pub max_overlap_degree: Option<usize>,
}

/// Layered random DAG with source 0 and sink `n - 1`.
///
/// Inner vertices are spread over about `sqrt(n)` layers. Arcs go from a
/// layer to any later one with probability `density`. A vertex left without
/// an in-arc (out-arc) gets one from (to) a random vertex of an earlier
/// (later) layer, so every vertex lies on a source-to-sink path.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Dag {
    assert!(n >= 2, "a DAG needs a source and a sink");
    let inner = n - 2;
    let layer_count = ((inner as f64).sqrt().ceil() as usize).max(1);
    // layer 0 is the source, layer_count + 1 the sink
    let mut layer = vec![0usize; n];
    layer[n - 1] = layer_count + 1;
    for (k, slot) in layer.iter_mut().enumerate().skip(1).take(inner) {
        *slot = if k <= layer_count { k } else { rng.gen_range(1..=layer_count) };
    }
    let mut arcs = Vec::new();
    for u in 1..n - 1 {
        for v in 1..n - 1 {
            if layer[u] < layer[v] && rng.gen_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    let mut has_in = vec![false; n];
    let mut has_out = vec![false; n];
    for &(u, v) in &arcs {
        has_out[u] = true;
        has_in[v] = true;
    }
    for v in 1..n - 1 {
        if !has_in[v] {
            let earlier: Vec<Vertex> = (0..n - 1).filter(|&u| layer[u] < layer[v]).collect();
            arcs.push((*earlier.choose(rng).expect("source is earlier"), v));
        }
        if !has_out[v] {
            let later: Vec<Vertex> = (1..n).filter(|&u| layer[u] > layer[v]).collect();
            arcs.push((v, *later.choose(rng).expect("sink is later")));
        }
    }
    if n == 2 || rng.gen_bool(density.min(1.0)) {
        arcs.push((0, n - 1));
    }
    arcs.sort_unstable();
    arcs.dedup();
    Dag::new(n, arcs, 0, n - 1).expect("layered arcs form a valid DAG")
}

/// Random DAG plus random coverable pairs.
pub fn random_instance(rng: &mut ChaCha8Rng, spec: RandomSpec) -> PcrpInstance {
    let dag = random_dag(rng, spec.vertices, spec.density);
    let n = dag.vertex_count();
    let base = PcrpInstance::new(dag, []).expect("no pairs");
    let reach = base.reach();
    let mut candidates: Vec<RequiredPair> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| reach.comparable(a, b))
        .map(|(a, b)| if reach.reaches(a, b) { RequiredPair::new(a, b) } else { RequiredPair::new(b, a) })
        .collect();
    candidates.shuffle(rng);
    let mut pairs: Vec<RequiredPair> = Vec::with_capacity(spec.pairs);
    for cand in candidates {
        if pairs.len() == spec.pairs {
            break;
        }
        pairs.push(cand);
        if let Some(limit) = spec.max_overlap_degree {
            let summary = OverlapSummary::new(&pairs, reach).expect("candidates are coverable");
            if summary.max_degree() > limit {
                pairs.pop();
            }
        }
    }
    base.with_pairs(pairs.iter().map(|p| (p.first, p.second))).expect("candidates are valid")
}

/// Blocks of `p + 1` mutually alternated pairs, placed in series and
/// padded with plain chain vertices up to exactly `n` vertices. Every pair
/// overlaps exactly the `p` others of its block, so the maximum overlap
/// degree is `p` whatever `n` is.
///
/// A block is a chain `x_0 .. x_{2p+1}` with shortcut arcs
/// `x_{k-1} -> x_{k+1}` and pairs `(x_k, x_{k+p+1})` for `k = 0..=p`.
pub fn serial_blocks(n: usize, p: usize) -> PcrpInstance {
    let width = 2 * p + 2;
    assert!(n >= width + 2, "need at least {} vertices for p = {p}", width + 2);
    let blocks = (n - 2) / width;
    let mut arcs = Vec::new();
    let mut pairs = Vec::new();
    let mut tail = 0;
    let mut next = 1;
    for _ in 0..blocks {
        let x = |k: usize| next + k;
        arcs.push((tail, x(0)));
        for k in 0..width - 1 {
            arcs.push((x(k), x(k + 1)));
            if k >= 1 {
                arcs.push((x(k - 1), x(k + 1)));
            }
        }
        for k in 0..=p {
            pairs.push((x(k), x(k + p + 1)));
        }
        tail = x(width - 1);
        next += width;
    }
    while next < n - 1 {
        arcs.push((tail, next));
        tail = next;
        next += 1;
    }
    arcs.push((tail, n - 1));
    let dag = Dag::new(n, arcs, 0, n - 1).expect("serial blocks form a DAG");
    PcrpInstance::new(dag, pairs).expect("block pairs are coverable")
}

/// `G(n, q)` random graph. With `connected`, a random spanning tree is laid
/// down first.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, q: f64, connected: bool) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    if connected && n > 1 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for k in 1..n {
            let parent = order[rng.gen_range(0..k)];
            g.add_edge(parent, order[k]).expect("distinct vertices");
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(q) {
                g.add_edge(u, v).expect("distinct vertices");
            }
        }
    }
    g
}
