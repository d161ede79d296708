//! Minimum separators by brute force, for tiny graphs.

use itertools::Itertools;

use super::{two_thirds, FBound, Separation, SeparatorError, SeparatorOracle, LIPTON_TARJAN_CONSTANT};
use crate::graph::Graph;
use crate::Rational;

pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Oracle returning a minimum-cardinality 2/3-balanced separator.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExhaustiveSeparator;

impl SeparatorOracle for ExhaustiveSeparator {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn alpha(&self) -> Rational {
        two_thirds()
    }

    fn bound(&self) -> FBound {
        // never larger than the planar construction on planar inputs
        FBound { c: LIPTON_TARJAN_CONSTANT, delta: 0.5, threshold: 2 }
    }

    fn separate_weighted(&self, g: &Graph, weights: &[u64]) -> Result<Separation, SeparatorError> {
        let found = exhaustive_weighted(g, weights, g.n(), &two_thirds())?;
        Ok(found.expect("S = V is always balanced"))
    }
}

/// Smallest `S` with `|S| <= size_budget` whose removal leaves components
/// that can be split into two sides of at most `alpha * n` vertices each.
/// Candidates are tried by size; among the smallest that work, the most
/// even split wins, then the lexicographically first. `Ok(None)` when no
/// separator fits the budget.
pub fn exhaustive_separator(
    g: &Graph,
    size_budget: usize,
    alpha: &Rational,
) -> Result<Option<Separation>, SeparatorError> {
    exhaustive_weighted(g, &vec![1; g.n()], size_budget, alpha)
}

pub fn exhaustive_weighted(
    g: &Graph,
    weights: &[u64],
    size_budget: usize,
    alpha: &Rational,
) -> Result<Option<Separation>, SeparatorError> {
    let n = g.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(SeparatorError::SizeLimitExceeded { n, limit: EXHAUSTIVE_LIMIT });
    }
    if weights.len() != n {
        return Err(SeparatorError::WeightLength(weights.len(), n));
    }
    let total: u64 = weights.iter().sum();
    let cap = alpha.clone() * Rational::from_integer(total.into());
    let fits = |w: u64| Rational::from_integer(w.into()) <= cap;
    for size in 0..=size_budget.min(n) {
        // best = (heavier side weight, separator, side assignment, components)
        let mut best: Option<(u64, Vec<usize>, Vec<bool>, Vec<Vec<usize>>)> = None;
        for subset in (0..n).combinations(size) {
            let mut mask = vec![false; n];
            for &v in &subset {
                mask[v] = true;
            }
            let comps = g.components_avoiding(&mask);
            let comp_weights: Vec<u64> =
                comps.iter().map(|c| c.iter().map(|&v| weights[v]).sum()).collect();
            let Some((heavier, side)) = split_pieces(&comp_weights) else { continue };
            if !(n <= 2 || fits(heavier)) {
                continue;
            }
            if best.as_ref().map_or(true, |b| heavier < b.0) {
                best = Some((heavier, subset, side, comps));
            }
        }
        if let Some((_, separator, side, comps)) = best {
            let mut side_a = Vec::new();
            let mut side_b = Vec::new();
            for (comp, a) in comps.into_iter().zip(side) {
                if a {
                    side_a.extend(comp);
                } else {
                    side_b.extend(comp);
                }
            }
            side_a.sort_unstable();
            side_b.sort_unstable();
            return Ok(Some(Separation { separator, side_a, side_b, alpha: alpha.clone() }));
        }
    }
    Ok(None)
}

/// Most even assignment of pieces to two sides, via subset sums. Returns
/// the heavier side's weight and the pieces placed on side A.
fn split_pieces(weights: &[u64]) -> Option<(u64, Vec<bool>)> {
    let total: u64 = weights.iter().sum();
    let mut reachable: Vec<(u64, u64)> = vec![(0, 0)];
    for (i, &w) in weights.iter().enumerate() {
        let mut next = reachable.clone();
        next.extend(reachable.iter().map(|&(s, m)| (s + w, m | (1 << i))));
        next.sort_unstable_by_key(|&(s, _)| s);
        next.dedup_by_key(|&mut (s, _)| s);
        reachable = next;
    }
    reachable
        .into_iter()
        .min_by_key(|&(s, _)| s.max(total - s))
        .map(|(s, m)| (s.max(total - s), (0..weights.len()).map(|i| m >> i & 1 == 1).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, star};
    use crate::separator::verify_separation;

    #[test]
    fn k4_needs_two() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let sep = exhaustive_separator(&g, 2, &two_thirds()).unwrap().unwrap();
        assert_eq!(sep.separator.len(), 2);
        assert!(verify_separation(&g, &sep).is_empty());
        assert!(exhaustive_separator(&g, 1, &two_thirds()).unwrap().is_none());
    }

    #[test]
    fn path_and_star_centers() {
        let sep = exhaustive_separator(&path(5), 5, &two_thirds()).unwrap().unwrap();
        assert_eq!(sep.separator, vec![2]);
        let sep = exhaustive_separator(&star(6), 7, &two_thirds()).unwrap().unwrap();
        assert_eq!(sep.separator, vec![0]);
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            exhaustive_separator(&path(21), 3, &two_thirds()),
            Err(SeparatorError::SizeLimitExceeded { n: 21, limit: 20 })
        );
    }
}
