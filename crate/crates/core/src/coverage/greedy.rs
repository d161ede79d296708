use fixedbitset::FixedBitSet;

use super::{CoverageInstance, Solution};

/// Picks `k` sets, each time the one adding the most new elements. Ties go
/// to the lowest index.
pub fn greedy_mc(inst: &CoverageInstance) -> Solution {
    let mut covered = FixedBitSet::with_capacity(inst.universe_size());
    let mut taken = vec![false; inst.family_size()];
    let mut chosen = Vec::with_capacity(inst.budget());
    for _ in 0..inst.budget() {
        let best = (0..inst.family_size())
            .filter(|&i| !taken[i])
            .map(|i| (inst.set(i).difference_count(&covered), i))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, i)) = best else { break };
        taken[i] = true;
        covered.union_with(inst.set(i));
        chosen.push(i);
    }
    chosen.sort_unstable();
    Solution { coverage: covered.count_ones(..), chosen }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_budget() {
        let inst = CoverageInstance::new(3, vec![vec![0, 1]], 0).unwrap();
        assert_eq!(greedy_mc(&inst), Solution::empty());
    }

    #[test]
    fn six_element_example() {
        let inst = CoverageInstance::new(6, vec![vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]], 2).unwrap();
        let sol = greedy_mc(&inst);
        assert_eq!(sol.chosen, vec![0, 1]);
        assert_eq!(sol.coverage, 5);
    }

    #[test]
    fn disjoint_sets_take_largest() {
        let inst = CoverageInstance::new(10, vec![vec![0], vec![1, 2, 3], vec![4, 5], vec![6, 7, 8, 9]], 2).unwrap();
        let sol = greedy_mc(&inst);
        assert_eq!(sol.chosen, vec![1, 3]);
        assert_eq!(sol.coverage, 7);
    }
}
