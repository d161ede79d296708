use itertools::Itertools;

use super::{CoverageError, CoverageInstance, Solution};

/// Largest number of `k`-subsets [`brute_force_mc`] will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Optimal solution by enumerating every `k`-subset in lexicographic order;
/// the first optimum found is returned.
pub fn brute_force_mc(inst: &CoverageInstance) -> Result<Solution, CoverageError> {
    let m = inst.family_size();
    let k = inst.budget();
    let needed = binomial(m, k);
    if needed > BRUTE_FORCE_LIMIT {
        return Err(CoverageError::SizeLimitExceeded { needed, limit: BRUTE_FORCE_LIMIT });
    }
    let mut best = Solution::empty();
    let mut first = true;
    for combo in (0..m).combinations(k) {
        let coverage = inst.coverage_of(&combo);
        if first || coverage > best.coverage {
            best = Solution { chosen: combo, coverage };
            first = false;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn examples() {
        let inst = CoverageInstance::new(6, vec![vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]], 2).unwrap();
        assert_eq!(brute_force_mc(&inst).unwrap(), Solution { chosen: vec![1, 2], coverage: 6 });
        let full = inst.with_budget(3).unwrap();
        assert_eq!(brute_force_mc(&full).unwrap().coverage, 6);
        let one = inst.with_budget(1).unwrap();
        assert_eq!(brute_force_mc(&one).unwrap().chosen, vec![0]);
    }

    #[test]
    fn size_limit() {
        let inst = CoverageInstance::new(1, vec![vec![0]; 60], 30).unwrap();
        assert!(matches!(brute_force_mc(&inst), Err(CoverageError::SizeLimitExceeded { .. })));
    }
}
