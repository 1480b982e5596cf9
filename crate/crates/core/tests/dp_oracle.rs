mod common;

use pcrp_core::maxrpsp::{max_rpsp_bruteforce, max_rpsp_dp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn dp_matches_bruteforce_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..3000 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.15..0.6);
        let pairs = rng.gen_range(0..=8);
        let inst = common::random_instance(&mut rng, n, density, pairs, false);
        let (brute, _) = max_rpsp_bruteforce(&inst, 100_000).unwrap();
        let dp = max_rpsp_dp(&inst).unwrap();
        assert_eq!(dp.count, brute, "case {case}: {inst:?}");
        assert_eq!(dp.covered.len(), dp.count, "case {case}");
    }
}

#[test]
fn adding_a_pair_never_lowers_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let n = rng.gen_range(3..=12);
        let inst = common::random_instance(&mut rng, n, 0.35, 9, true);
        let mut prev = 0;
        for k in 0..=inst.pairs().len() {
            let sub = inst.with_pairs(inst.pairs()[..k].iter().map(|p| (p.first, p.second))).unwrap();
            let now = max_rpsp_dp(&sub).unwrap().count;
            assert!(now >= prev);
            prev = now;
        }
    }
}

#[test]
fn witness_and_state_bound() {
    use pcrp_core::instance::{verify_solution, VerifyMode};
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let n = rng.gen_range(3..=14);
        let inst = common::random_instance(&mut rng, n, 0.3, 10, true);
        let out = max_rpsp_dp(&inst).unwrap();
        let claimed = inst.with_pairs(out.covered.iter().map(|p| (p.first, p.second))).unwrap();
        let report =
            verify_solution(&claimed, std::slice::from_ref(&out.witness), VerifyMode::PairsOnly).unwrap();
        assert!(report.is_valid());
        assert!(out.covered.len() >= out.count);
        let p = out.stats.max_overlap_degree as u32;
        assert!(out.stats.state_count as u128 <= out.stats.state_bound);
        assert!(out.stats.state_bound <= 1 + out.stats.pair_count as u128 * (1u128 << (2 * p + 1)));
    }
}
