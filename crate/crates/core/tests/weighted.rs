mod common;

use num_rational::BigRational;
use proptest::prelude::*;

use simplegames::duality::game_is_decisive;
use simplegames::oracle::{oracle_properties, OracleLimit};
use simplegames::regular::find_regular_order;
use simplegames::weighted::{
    is_homogeneous, is_majority, is_weighted, maximal_losing_coalitions, power_of_two_strongness,
    search_nonweighted_certificate, verify_nonweighted_certificate, ThresholdCriterion,
};
use simplegames::{Coalition, Hypergraph, SimpleGame};

const LIM: OracleLimit = OracleLimit(12);

/// Checks a criterion against the whole table, not just kernel and losers.
fn realizes_everywhere(c: &ThresholdCriterion, h: &Hypergraph) -> bool {
    let below = &c.quota - BigRational::from_integer(1.into());
    c.realizes(h)
        && Coalition::all(h.n()).all(|z| if h.responds(z) { c.weight(z) >= c.quota } else { c.weight(z) <= below })
}

#[test]
fn every_kernel_up_to_five() {
    for n in 1..=5 {
        for h in common::all_antichains(n) {
            let table = common::table(&h);
            let g = SimpleGame::new(h.clone()).unwrap();
            let weighted = is_weighted(&g);
            assert_eq!(weighted.is_ok(), common::brute_weighted(n, &table), "{h:?}");
            if let Ok(c) = &weighted {
                assert!(realizes_everywhere(c, &h));
                assert!(find_regular_order(&h).unwrap().is_some());
            }
            if let Ok(c) = is_homogeneous(&g) {
                assert!(realizes_everywhere(&c, &h));
                assert!(h.iter().all(|x| c.weight(*x) == c.quota));
            }
            let maj = is_majority(&g);
            let props = oracle_properties(&h, LIM).unwrap();
            assert_eq!(maj.is_majority(), props.decisive && weighted.is_ok(), "{h:?}");
            assert_eq!(maj.is_submajority(), props.strong && weighted.is_ok(), "{h:?}");
            assert_eq!(maj.is_majority(), game_is_decisive(&g) && weighted.is_ok());
            if let Some(c) = &maj.criterion {
                assert!(realizes_everywhere(c, &h));
            }
            if n <= 4 {
                if let Some(cert) = search_nonweighted_certificate(&h, 4) {
                    assert!(verify_nonweighted_certificate(&h, &cert).unwrap());
                    assert!(weighted.is_err(), "certificate for a weighted game {h:?}");
                }
            }
        }
    }
}

#[test]
fn certificates_at_five_players() {
    for h in &common::all_antichains(5) {
        if let Some(cert) = search_nonweighted_certificate(h, 4) {
            assert!(verify_nonweighted_certificate(h, &cert).unwrap());
            assert!(is_weighted(&SimpleGame::new(h.clone()).unwrap()).is_err(), "{h:?}");
        }
    }
}

#[test]
fn power_of_two_games_match_the_table() {
    for n in 1..=12usize {
        let step = if n <= 8 { 1 } else { 37 };
        for bits in (0..1u64 << n).step_by(step) {
            let x = Coalition::new(n, bits).unwrap();
            let w = |z: u64| -> u64 { (0..n).filter(|i| z >> i & 1 == 1).map(|i| 2u64 << i).sum() };
            let quota = w(bits);
            let table: Vec<bool> = (0..1u64 << n).map(|z| w(z) >= quota).collect();
            let kernel = simplegames::oracle::table_kernel(n, &table);
            let strong = oracle_properties(&kernel, LIM).unwrap().strong;
            assert_eq!(power_of_two_strongness(n, x), strong, "{x}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_weighted_games_are_recognized(seed in any::<u64>(), n in 1usize..=10) {
        let (_, _, h) = common::random_weighted(&mut common::rng(seed), n);
        let g = SimpleGame::new(h.clone()).unwrap();
        let c = is_weighted(&g);
        prop_assert!(c.is_ok());
        let c = c.unwrap();
        prop_assert!(c.satisfies(&h, &maximal_losing_coalitions(&h)));
        if n <= 8 {
            prop_assert!(realizes_everywhere(&c, &h));
        }
        prop_assert!(find_regular_order(&h).unwrap().is_some());
    }

    #[test]
    fn weighted_implies_linear(h in common::antichain_strategy(8, 6)) {
        let g = SimpleGame::new(h.clone()).unwrap();
        let table = common::table(&h);
        match is_weighted(&g) {
            Ok(c) => {
                prop_assert!(realizes_everywhere(&c, &h));
                prop_assert!(common::brute_linear(h.n(), &table));
            }
            Err(_) => prop_assert!(!common::brute_weighted(h.n(), &table)),
        }
    }
}
