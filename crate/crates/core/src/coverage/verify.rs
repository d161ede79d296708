use std::collections::BTreeSet;

use itertools::Itertools;

use super::exact::binomial;
use super::{CoverageError, CoverageInstance, Solution, SwapMove};

/// Largest number of moves [`verify_local_optimum`] will enumerate.
pub const VERIFY_LIMIT: u128 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalOptimality {
    LocallyOptimal,
    Improvable(SwapMove),
}

impl LocalOptimality {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LocalOptimality::LocallyOptimal)
    }
}

/// Number of moves a full scan examines for a solution of `size` sets among
/// `family` sets.
pub fn count_swaps(size: usize, family: usize, budget: usize, b: usize) -> u128 {
    let outside = family - size;
    let mut total = if size < budget { outside as u128 } else { 0 };
    for s in 1..=b.min(size) {
        let into: u128 = (1..=s).map(|j| binomial(outside, j)).sum();
        total = total.saturating_add(binomial(size, s).saturating_mul(into));
    }
    total
}

/// Checks every move with `|out| <= b` and `1 <= |into| <= |out|` (plus
/// single additions while below budget) by recomputing the union from
/// scratch. Returns the first improving move in canonical order.
pub fn verify_local_optimum(inst: &CoverageInstance, sol: &Solution, b: usize) -> Result<LocalOptimality, CoverageError> {
    inst.check_selection(&sol.chosen)?;
    let needed = count_swaps(sol.chosen.len(), inst.family_size(), inst.budget(), b);
    if needed > VERIFY_LIMIT {
        return Err(CoverageError::SizeLimitExceeded { needed, limit: VERIFY_LIMIT });
    }
    let members: Vec<Vec<usize>> = (0..inst.family_size()).map(|i| inst.members(i)).collect();
    let cover = |sets: &[usize]| -> usize { sets.iter().flat_map(|&i| members[i].iter()).collect::<BTreeSet<_>>().len() };
    let current: BTreeSet<usize> = sol.chosen.iter().copied().collect();
    let before = cover(&sol.chosen) as i64;
    let outside: Vec<usize> = (0..inst.family_size()).filter(|i| !current.contains(i)).collect();

    let check = |out: Vec<usize>, into: Vec<usize>| -> Option<SwapMove> {
        let mut after: Vec<usize> = current.iter().copied().filter(|i| !out.contains(i)).collect();
        after.extend(&into);
        let gain = cover(&after) as i64 - before;
        (gain > 0).then_some(SwapMove { out, into, gain })
    };
    if sol.chosen.len() < inst.budget() {
        for &j in &outside {
            if let Some(found) = check(vec![], vec![j]) {
                return Ok(LocalOptimality::Improvable(found));
            }
        }
    }
    for s in 1..=b.min(sol.chosen.len()) {
        for out in sol.chosen.iter().copied().combinations(s) {
            for j in 1..=s {
                for into in outside.iter().copied().combinations(j) {
                    if let Some(found) = check(out.clone(), into) {
                        return Ok(LocalOptimality::Improvable(found));
                    }
                }
            }
        }
    }
    Ok(LocalOptimality::LocallyOptimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coverage::{brute_force_mc, greedy_mc};

    fn six() -> CoverageInstance {
        CoverageInstance::new(6, vec![vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]], 2).unwrap()
    }

    #[test]
    fn optimum_is_locally_optimal() {
        let inst = six();
        let opt = brute_force_mc(&inst).unwrap();
        for b in 1..=3 {
            assert!(verify_local_optimum(&inst, &opt, b).unwrap().is_optimal());
        }
    }

    #[test]
    fn greedy_is_not_one_swap_optimal() {
        let inst = six();
        let res = verify_local_optimum(&inst, &greedy_mc(&inst), 1).unwrap();
        assert_eq!(res, LocalOptimality::Improvable(SwapMove { out: vec![0], into: vec![2], gain: 1 }));
    }

    #[test]
    fn empty_solution_can_add() {
        let inst = six();
        match verify_local_optimum(&inst, &Solution::empty(), 1).unwrap() {
            LocalOptimality::Improvable(mv) => {
                assert!(mv.out.is_empty());
                assert_eq!(mv.into, vec![0]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn counts_moves() {
        // size 2 of 3, full budget, b = 1: two removals times one insertion
        assert_eq!(count_swaps(2, 3, 2, 1), 2);
        assert_eq!(count_swaps(0, 3, 2, 1), 3);
    }
}
