mod common;

use pcrp_core::graph::{enumerate_st_paths, is_chain};
use pcrp_core::instance::{
    classify_overlap, coverable, is_nested_in, op_set, order_pairs, verify_solution, OverlapSummary, VerifyMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn coverable_matches_path_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let n = rng.gen_range(2..=10);
        let inst = common::random_instance(&mut rng, n, 0.3, 6, false);
        let paths = enumerate_st_paths(inst.dag(), 100_000).unwrap();
        for &p in inst.pairs() {
            let oracle = paths.iter().any(|q| q.contains(p.first) && q.contains(p.second));
            assert_eq!(coverable(p, inst.reach()), oracle);
        }
    }
}

#[test]
fn overlap_is_symmetric_and_matches_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let n = rng.gen_range(4..=10);
        let density = rng.gen_range(0.2..0.6);
        let inst = common::random_instance(&mut rng, n, density, 6, true);
        let paths = enumerate_st_paths(inst.dag(), 100_000).unwrap();
        let pos = |path: &pcrp_core::StPath, v| path.vertices().iter().position(|&x| x == v).unwrap();
        for &p in inst.pairs() {
            for &q in inst.pairs() {
                if p == q {
                    continue;
                }
                let a = classify_overlap(p, q, inst.reach()).unwrap();
                let b = classify_overlap(q, p, inst.reach()).unwrap();
                assert_eq!(a.overlaps(), b.overlaps());
                // oracle: some path holds all four vertices and the two
                // pairs' spans share more than a single touching vertex
                let oracle = paths.iter().any(|path| {
                    [p.first, p.second, q.first, q.second].iter().all(|&v| path.contains(v)) && {
                        let (a1, a2) = (pos(path, p.first), pos(path, p.second));
                        let (b1, b2) = (pos(path, q.first), pos(path, q.second));
                        a1.max(b1) < a2.min(b2)
                    }
                });
                assert_eq!(a.overlaps(), oracle, "{p} {q}");
            }
        }
    }
}

#[test]
fn op_sets_respect_the_size_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=14);
        let density = rng.gen_range(0.1..0.7);
        let inst = common::random_instance(&mut rng, n, density, 10, true);
        let ord = order_pairs(&inst);
        let summary = OverlapSummary::new(ord.pairs(), inst.reach()).unwrap();
        for rank in 1..=ord.len() {
            let op = op_set(rank, &inst, &ord);
            assert!(op.len() <= 2 * summary.degrees()[rank - 1] + 1);
            assert!(op.contains(&ord.pair(rank).unwrap().first));
        }
    }
}

#[test]
fn ordering_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=12);
        let density = rng.gen_range(0.1..0.7);
        let inst = common::random_instance(&mut rng, n, density, 8, true);
        let reach = inst.reach();
        let ord = order_pairs(&inst);
        for i in 1..=ord.len() {
            for j in 1..i {
                let (pi, pj) = (ord.pair(i).unwrap(), ord.pair(j).unwrap());
                if is_nested_in(pj, pi, reach) {
                    continue;
                }
                // no prefix ending at the second vertex of j covers both pairs
                let set = [pi.first, pi.second, pj.first, pj.second];
                let prefix = is_chain(&set, reach).is_some() && set.iter().all(|&v| reach.reaches(v, pj.second));
                assert!(!prefix, "ranks {j} < {i}: {pj} then {pi}");
            }
        }
    }
}

#[test]
fn full_enumeration_is_a_valid_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..200 {
        let n = rng.gen_range(2..=9);
        let inst = common::random_instance(&mut rng, n, 0.4, 5, true);
        let paths = enumerate_st_paths(inst.dag(), 100_000).unwrap();
        assert!(verify_solution(&inst, &paths, VerifyMode::CoverAll).unwrap().is_valid());
    }
}
