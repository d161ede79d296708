use balcover_core::division::{
    rf_division, uniform_division, uniform_division_traced, verify_division, Division, DivisionError, SizeRule,
};
use balcover_core::generators::{grid, path, triangulated_grid};
use balcover_core::graph::Graph;
use balcover_core::rng::stream_rng;
use balcover_core::separator::{PlanarSeparator, SeparatorOracle};
use proptest::prelude::*;

/// Plain recomputation: parts and X partition V, no edge joins two parts.
fn partition_ok(g: &Graph, d: &Division) -> bool {
    let mut owner = vec![None; g.n()];
    for (tag, set) in std::iter::once(&d.boundary).chain(&d.parts).enumerate() {
        for &v in set {
            if owner[v].is_some() {
                return false;
            }
            owner[v] = Some(tag);
        }
    }
    owner.iter().all(Option::is_some)
        && g.edges().all(|(u, v)| owner[u] == Some(0) || owner[v] == Some(0) || owner[u] == owner[v])
}

#[test]
fn path_parts_have_two_boundary_neighbors() {
    let g = path(100);
    let d = rf_division(&g, &PlanarSeparator, 10).unwrap();
    assert!(verify_division(&g, &d, SizeRule::Closed).is_valid());
    assert!(d.part_boundary.iter().all(|b| b.len() <= 2));
}

#[test]
fn small_graph_is_one_part() {
    let g = grid(3, 3);
    let d = rf_division(&g, &PlanarSeparator, 20).unwrap();
    assert_eq!(d.t(), 1);
    assert!(d.boundary.is_empty());
}

#[test]
fn grid_64_records_c1() {
    let g = grid(32, 32);
    let d = rf_division(&g, &PlanarSeparator, 64).unwrap();
    let rep = verify_division(&g, &d, SizeRule::Closed);
    assert!(rep.is_valid(), "{:?}", rep.violations);
    assert!(rep.measured_c1 > 0.0 && rep.measured_c1.is_finite());
}

#[test]
fn text_round_trip() {
    let g = triangulated_grid(20, 20, None);
    let d = uniform_division(&g, &PlanarSeparator, 16).unwrap();
    let back = Division::parse_text(&d.to_text(), &g).unwrap();
    assert_eq!(back, d);
}

#[test]
fn window_errors_name_the_bound() {
    let g = grid(10, 10);
    let low = uniform_division(&g, &PlanarSeparator, 4).unwrap_err();
    assert!(matches!(low, DivisionError::ParameterOutOfWindow { .. }));
    let high = uniform_division(&g, &PlanarSeparator, 4000).unwrap_err();
    assert!(high.to_string().contains("upper"), "{high}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rf_division_invariants(w in 2usize..30, h in 2usize..30, r in 3usize..60, seed in any::<u64>()) {
        let g = triangulated_grid(w, h, Some(&mut stream_rng(seed, 0)));
        let d = rf_division(&g, &PlanarSeparator, r).unwrap();
        let rep = verify_division(&g, &d, SizeRule::Closed);
        prop_assert!(rep.is_valid(), "{:?}", rep.violations);
        prop_assert!(partition_ok(&g, &d));
        let cap = PlanarSeparator.bound().eval(r as f64).ceil() as usize;
        for (part, bnd) in d.parts.iter().zip(&d.part_boundary) {
            prop_assert!(bnd.len() <= cap || part.len() <= 2, "boundary {} > {cap}", bnd.len());
        }
    }

    #[test]
    fn uniform_division_invariants(w in 4usize..50, h in 4usize..50, k in 1usize..6, triangulate in any::<bool>()) {
        let r = 8 * k;
        let g = if triangulate { triangulated_grid(w, h, None) } else { grid(w, h) };
        match uniform_division_traced(&g, &PlanarSeparator, r) {
            Ok((d, trace)) => {
                let rep = verify_division(&g, &d, SizeRule::Uniform);
                prop_assert!(rep.is_valid(), "{:?}", rep.violations);
                prop_assert!(partition_ok(&g, &d));
                for p in &d.parts {
                    prop_assert!(2 * p.len() >= r && p.len() <= 2 * r);
                }
                prop_assert!(trace.base_sizes.windows(2).all(|x| x[0] >= x[1]));
                let inside: usize = d.parts.iter().map(Vec::len).sum();
                prop_assert_eq!(inside, trace.n_star);
                prop_assert_eq!(d.t(), trace.n_star.div_ceil(r));
                let again = uniform_division(&g, &PlanarSeparator, r).unwrap();
                prop_assert_eq!(again, d);
            }
            Err(e) => prop_assert!(matches!(e, DivisionError::ParameterOutOfWindow { .. }), "{e}"),
        }
    }
}
