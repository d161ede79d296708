use balcover_core::generators::{grid, grid_subgraph, triangulated_grid};
use balcover_core::graph::validate_graph;
use balcover_core::rng::stream_rng;
use balcover_core::separator::{
    exhaustive_separator, lipton_tarjan_separator, verify_separation, ExhaustiveSeparator, PlanarSeparator,
    SeparatorOracle,
};
use balcover_core::Rational;
use proptest::prelude::*;

fn two_thirds() -> Rational {
    Rational::new(2.into(), 3.into())
}

// |S| <= 2 sqrt(2) sqrt(n)  <=>  |S|^2 <= 8n
fn within_planar_bound(size: usize, n: usize) -> bool {
    size * size <= 8 * n
}

#[test]
fn full_grids_meet_the_size_bound() {
    for (w, h) in [(1, 1), (1, 30), (2, 2), (5, 7), (20, 20), (64, 31), (100, 100)] {
        let g = grid(w, h);
        let sep = lipton_tarjan_separator(&g).unwrap();
        assert!(verify_separation(&g, &sep).is_empty(), "{w}x{h}");
        assert!(within_planar_bound(sep.separator.len(), g.n()), "{w}x{h}: |S| = {}", sep.separator.len());
    }
}

#[test]
fn oracle_trait_dispatch() {
    let g = triangulated_grid(4, 4, None);
    let oracles: [&dyn SeparatorOracle; 2] = [&PlanarSeparator, &ExhaustiveSeparator];
    for o in oracles {
        let sep = o.separate(&g).unwrap();
        assert!(verify_separation(&g, &sep).is_empty(), "{}", o.name());
        assert_eq!(o.alpha(), two_thirds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_separator_invariants(w in 1usize..40, h in 1usize..40, keep in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = grid_subgraph(w, h, keep, &mut stream_rng(seed, 0));
        let sep = lipton_tarjan_separator(&g).unwrap();
        let problems = verify_separation(&g, &sep);
        prop_assert!(problems.is_empty(), "{:?}", problems);
        prop_assert!(within_planar_bound(sep.separator.len(), g.n()));
    }

    #[test]
    fn triangulated_grids_separate(w in 2usize..30, h in 2usize..30, seed in any::<u64>()) {
        let g = triangulated_grid(w, h, Some(&mut stream_rng(seed, 0)));
        prop_assert!(validate_graph(&g).is_valid());
        let sep = lipton_tarjan_separator(&g).unwrap();
        prop_assert!(verify_separation(&g, &sep).is_empty());
        prop_assert!(within_planar_bound(sep.separator.len(), g.n()));
    }

    #[test]
    fn exhaustive_is_never_larger(w in 1usize..5, h in 1usize..5, keep in 0.3f64..=1.0, seed in any::<u64>()) {
        let g = grid_subgraph(w, h, keep, &mut stream_rng(seed, 1));
        let lt = lipton_tarjan_separator(&g).unwrap();
        let ex = exhaustive_separator(&g, g.n(), &two_thirds()).unwrap().unwrap();
        prop_assert!(verify_separation(&g, &ex).is_empty());
        prop_assert!(ex.separator.len() <= lt.separator.len());
    }
}
