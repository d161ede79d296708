use balcover_core::coverage::{
    brute_force_mc, check_exchange_property, exchange_graph_md, exchange_graph_mvc, greedy_mc, local_search_with,
    parse_trace, reduce_md, reduce_mvc, trace_to_text, verify_local_optimum, CoverageInstance, Init,
    LocalSearchConfig, Solution,
};
use balcover_core::generators::{grid_subgraph, random_coverage, sample_indices, triangulated_grid};
use balcover_core::graph::validate_graph;
use balcover_core::rng::stream_rng;
use proptest::prelude::*;

/// Best coverage over all `k`-subsets, by bitmask enumeration.
fn best_by_masks(inst: &CoverageInstance) -> usize {
    let m = inst.family_size();
    let sets: Vec<u64> = (0..m).map(|i| inst.members(i).iter().fold(0u64, |s, &e| s | 1 << e)).collect();
    (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize == inst.budget())
        .map(|mask| (0..m).filter(|&i| mask >> i & 1 == 1).fold(0u64, |u, i| u | sets[i]).count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn instance() -> impl Strategy<Value = CoverageInstance> {
    (1usize..=24, 1usize..=12, 0.05f64..0.6, any::<u64>())
        .prop_flat_map(|(u, f, dens, seed)| (Just(u), Just(f), 0..=f, Just(dens), Just(seed)))
        .prop_map(|(u, f, k, dens, seed)| random_coverage(u, f, k, dens, &mut stream_rng(seed, 0)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn local_search_properties(inst in instance(), b in 1usize..4, init in 0u8..3, seed in any::<u64>()) {
        let opt = best_by_masks(&inst);
        prop_assert_eq!(brute_force_mc(&inst).unwrap().coverage, opt);
        let mut config = LocalSearchConfig::new(b);
        config.init = match init { 0 => Init::Greedy, 1 => Init::Empty, _ => Init::Random(seed) };
        let res = local_search_with(&inst, &config).unwrap();
        prop_assert!(res.certified);
        prop_assert!(res.solution.validate(&inst).is_ok());
        prop_assert!(verify_local_optimum(&inst, &res.solution, b).unwrap().is_optimal());
        prop_assert!(2 * res.solution.coverage >= opt);
        // replaying the trace reproduces the solution
        let mut chosen = match &config.init {
            Init::Empty => vec![],
            _ => local_search_with(&inst, &LocalSearchConfig { b, init: config.init.clone(), work_limit: 0 }).unwrap().solution.chosen,
        };
        for m in &res.trace {
            let before = inst.coverage_of(&chosen) as i64;
            chosen = m.apply(&chosen);
            prop_assert_eq!(inst.coverage_of(&chosen) as i64 - before, m.gain);
            prop_assert!(m.gain > 0 && m.out.len() <= b && m.into.len() <= m.out.len().max(1));
        }
        prop_assert_eq!(chosen, res.solution.chosen.clone());
        prop_assert_eq!(parse_trace(&trace_to_text(&res.trace)).unwrap(), res.trace);
    }

    #[test]
    fn saturation_matches_enumeration(inst in instance()) {
        let res = local_search_with(&inst, &LocalSearchConfig::new(inst.family_size().max(1))).unwrap();
        prop_assert_eq!(res.solution.coverage, best_by_masks(&inst));
    }

    #[test]
    fn greedy_is_feasible(inst in instance()) {
        let g = greedy_mc(&inst);
        prop_assert!(g.validate(&inst).is_ok());
        prop_assert_eq!(g.chosen.len(), inst.budget());
        // (1 - 1/e) OPT, with a margin for float rounding
        prop_assert!(g.coverage as f64 >= (1.0 - (-1.0f64).exp()) * best_by_masks(&inst) as f64 - 1e-9);
    }

    #[test]
    fn exchange_property_on_planar_graphs(w in 2usize..9, h in 2usize..9, keep in 0.3f64..=1.0, seed in any::<u64>(), md in any::<bool>()) {
        let mut rng = stream_rng(seed, 0);
        let g = if keep > 0.9 { triangulated_grid(w, h, Some(&mut rng)) } else { grid_subgraph(w, h, keep, &mut rng) };
        let n = g.n();
        let k = (n / 4).max(1);
        let inst = if md { reduce_md(&g, k).unwrap() } else { reduce_mvc(&g, k).unwrap() };
        let picks = sample_indices(n, 2 * k.min(n / 2), &mut rng);
        let (a, o): (Vec<usize>, Vec<usize>) = {
            let (x, y): (Vec<_>, Vec<_>) = picks.iter().enumerate().partition(|(i, _)| i % 2 == 0);
            (x.into_iter().map(|p| *p.1).collect(), y.into_iter().map(|p| *p.1).collect())
        };
        let h = if md { exchange_graph_md(&g, &a, &o).unwrap() } else { exchange_graph_mvc(&g, &a, &o).unwrap() };
        prop_assert!(check_exchange_property(&inst, &a, &o, &h).is_empty());
        prop_assert!(validate_graph(&h.to_graph()).is_valid());
    }
}

#[test]
fn vertex_cover_reduction_counts_edges() {
    let g = triangulated_grid(5, 4, None);
    let inst = reduce_mvc(&g, 3).unwrap();
    assert_eq!(inst.universe_size(), g.edge_count());
    let chosen = vec![0, 7, 13];
    let covered = g.edges().filter(|(u, v)| chosen.contains(u) || chosen.contains(v)).count();
    assert_eq!(inst.coverage_of(&chosen), covered);
}

#[test]
fn json_round_trips() {
    let inst = random_coverage(20, 10, 3, 0.3, &mut stream_rng(7, 0));
    assert_eq!(CoverageInstance::from_json(&inst.to_json()).unwrap(), inst);
    let sol = greedy_mc(&inst);
    assert_eq!(Solution::from_json(&sol.to_json()).unwrap(), sol);
}
