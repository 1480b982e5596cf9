#![allow(clippy::needless_range_loop)]

mod common;

use pcrp_core::graph::{
    collapse_sccs, contract_vertex, enumerate_st_paths, is_chain, stitch_chain, topological_sort,
};
use pcrp_core::ReachabilityIndex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn closure_matches_dfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.1..0.7);
        let dag = common::random_dag(&mut rng, n, density);
        let reach = ReachabilityIndex::new(&dag);
        let oracle = common::dfs_reach(&dag);
        for u in 0..n {
            for v in 0..n {
                assert_eq!(reach.reaches(u, v), oracle[u][v]);
            }
        }
        // closing an already closed relation changes nothing
        let closed = pcrp_core::Dag::new(
            n,
            (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v && reach.reaches(u, v)),
            0,
            n - 1,
        )
        .unwrap();
        let again = ReachabilityIndex::new(&closed);
        assert!((0..n).all(|u| (0..n).all(|v| again.reaches(u, v) == reach.reaches(u, v))));
    }
}

#[test]
fn condensation_matches_mutual_reachability() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let n = 8;
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .filter(|_| rng.gen_bool(0.2))
            .collect();
        // Floyd-Warshall closure as the oracle
        let mut r = vec![vec![false; n]; n];
        for u in 0..n {
            r[u][u] = true;
        }
        for &(u, v) in &arcs {
            r[u][v] = true;
        }
        for k in 0..n {
            for u in 0..n {
                for v in 0..n {
                    r[u][v] |= r[u][k] && r[k][v];
                }
            }
        }
        let (dag, map) = collapse_sccs(n, &arcs, 0, n - 1).unwrap();
        assert!(topological_sort(dag.vertex_count(), &dag.arcs().collect::<Vec<_>>()).is_ok());
        for u in 0..n {
            for v in 0..n {
                assert_eq!(map[u] == map[v], r[u][v] && r[v][u]);
                if map[u] != map[v] && arcs.contains(&(u, v)) {
                    assert!(dag.has_arc(map[u], map[v]));
                }
            }
        }
        let expected: std::collections::BTreeSet<_> =
            arcs.iter().filter(|&&(u, v)| map[u] != map[v]).map(|&(u, v)| (map[u], map[v])).collect();
        assert_eq!(dag.arcs().collect::<std::collections::BTreeSet<_>>(), expected);
    }
}

#[test]
fn chain_test_matches_path_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let n = rng.gen_range(2..=10);
        let density = rng.gen_range(0.15..0.6);
        let dag = common::random_dag(&mut rng, n, density);
        let reach = ReachabilityIndex::new(&dag);
        let paths = enumerate_st_paths(&dag, 100_000).unwrap();
        for _ in 0..10 {
            let set: Vec<usize> = (0..4).map(|_| rng.gen_range(0..n)).collect();
            let on_one = paths.iter().any(|p| set.iter().all(|&v| p.contains(v)));
            assert_eq!(is_chain(&set, &reach).is_some(), on_one, "{set:?}");
        }
    }
}

proptest! {
    #[test]
    fn stitched_paths_are_valid(
        (n, mask, picks) in (2usize..10).prop_flat_map(|n| (
            Just(n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            proptest::collection::vec(0..n, 0..5),
        ))
    ) {
        let dag = common::dag_from_mask(n, &mask);
        let reach = ReachabilityIndex::new(&dag);
        if let Some(chain) = is_chain(&picks, &reach) {
            let path = stitch_chain(&dag, &reach, &chain).unwrap();
            prop_assert!(path.check(&dag).is_ok());
            let positions: Vec<usize> =
                chain.iter().map(|v| path.vertices().iter().position(|x| x == v).unwrap()).collect();
            prop_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn contraction_bypasses_the_vertex(
        (n, mask, pick) in (3usize..9).prop_flat_map(|n| (
            Just(n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            1..n - 1,
        ))
    ) {
        let dag = common::dag_from_mask(n, &mask);
        let c = contract_vertex(&dag, pick).unwrap();
        let id = |u: usize| c.old_to_new[u].unwrap();
        for &u in dag.predecessors(pick) {
            for &z in dag.successors(pick) {
                prop_assert!(c.dag.has_arc(id(u), id(z)));
            }
        }
        for (u, v) in dag.arcs().filter(|&(u, v)| u != pick && v != pick) {
            prop_assert!(c.dag.has_arc(id(u), id(v)));
        }
        prop_assert_eq!(c.dag.vertex_count(), n - 1);
    }
}
