use pcrp::format::{parse_instance, parse_solution, write_instance, write_solution};
use pcrp::gen::{self, RandomSpec};
use pcrp_core::cover::greedy_minpcrp;
use pcrp_core::instance::{verify_solution, VerifyMode};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn instance_text_round_trips(seed in any::<u64>(), n in 2usize..20, density in 0.05f64..0.9, pairs in 0usize..10) {
        let inst = gen::random_instance(
            &mut gen::rng_from_seed(seed),
            RandomSpec { vertices: n, density, pairs, max_overlap_degree: None },
        );
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert!(back.collapsed.is_none());
        prop_assert_eq!(write_instance(&back.instance), text);
        prop_assert_eq!(back.instance.pairs().len(), inst.pairs().len());
    }

    #[test]
    fn greedy_solution_file_verifies(seed in any::<u64>(), n in 2usize..16, density in 0.05f64..0.9, pairs in 0usize..8) {
        let inst = gen::random_instance(
            &mut gen::rng_from_seed(seed),
            RandomSpec { vertices: n, density, pairs, max_overlap_degree: None },
        );
        let paths = greedy_minpcrp(&inst).unwrap();
        let back = parse_solution(&write_solution(&paths)).unwrap();
        prop_assert_eq!(&back, &paths);
        prop_assert!(verify_solution(&inst, &back, VerifyMode::CoverAll).unwrap().is_valid());
    }

    #[test]
    fn parser_never_panics(text in "[pcrnastk0-9# \n]{0,80}") {
        let _ = parse_instance(&text);
        let _ = parse_solution(&text);
    }
}
