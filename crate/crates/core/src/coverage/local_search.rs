use fixedbitset::FixedBitSet;
use itertools::Itertools;

use super::{greedy_mc, CoverageError, CoverageInstance, Solution};
use crate::generators::sample_indices;
use crate::rng::stream_rng;

/// Replace the sets `out` of the current solution by the sets `into`.
/// `out` is empty only for pure additions while the solution is below
/// budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapMove {
    pub out: Vec<usize>,
    pub into: Vec<usize>,
    pub gain: i64,
}

impl SwapMove {
    /// Selection after applying the move, sorted.
    pub fn apply(&self, chosen: &[usize]) -> Vec<usize> {
        let mut next: Vec<usize> = chosen.iter().copied().filter(|i| !self.out.contains(i)).collect();
        next.extend(&self.into);
        next.sort_unstable();
        next
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Init {
    Greedy,
    Empty,
    /// `k` sets drawn uniformly with the given seed.
    Random(u64),
    Given(Solution),
}

#[derive(Debug, Clone)]
pub struct LocalSearchConfig {
    pub b: usize,
    pub init: Init,
    /// Total number of candidate moves the search may evaluate.
    pub work_limit: u64,
}

impl LocalSearchConfig {
    pub fn new(b: usize) -> Self {
        LocalSearchConfig { b, init: Init::Greedy, work_limit: 200_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct LocalSearchResult {
    pub solution: Solution,
    pub trace: Vec<SwapMove>,
    /// False when the work limit stopped the search before a full pass
    /// found no improving move.
    pub certified: bool,
    pub evaluated: u64,
}

/// b-swap local search from `init` (greedy when `None`).
pub fn local_search_mc(
    inst: &CoverageInstance,
    b: usize,
    init: Option<Solution>,
) -> Result<LocalSearchResult, CoverageError> {
    let mut config = LocalSearchConfig::new(b);
    if let Some(sol) = init {
        config.init = Init::Given(sol);
    }
    local_search_with(inst, &config)
}

pub fn local_search_with(inst: &CoverageInstance, config: &LocalSearchConfig) -> Result<LocalSearchResult, CoverageError> {
    if config.b == 0 {
        return Err(CoverageError::InvalidParameter("b must be at least 1".into()));
    }
    let mut current = match &config.init {
        Init::Greedy => greedy_mc(inst),
        Init::Empty => Solution::empty(),
        Init::Random(seed) => {
            let mut rng = stream_rng(*seed, 0);
            Solution::new(inst, sample_indices(inst.family_size(), inst.budget(), &mut rng))?
        }
        Init::Given(sol) => Solution::new(inst, sol.chosen.clone())?,
    };
    let mut trace = Vec::new();
    let mut evaluated = 0u64;
    loop {
        match first_improvement(inst, &current, config.b, config.work_limit - evaluated.min(config.work_limit)) {
            Scan::Improved(mv, work) => {
                evaluated += work;
                let chosen = mv.apply(&current.chosen);
                let coverage = (current.coverage as i64 + mv.gain) as usize;
                debug_assert_eq!(coverage, inst.coverage_of(&chosen));
                current = Solution { chosen, coverage };
                trace.push(mv);
            }
            Scan::Optimal(work) => {
                evaluated += work;
                return Ok(LocalSearchResult { solution: current, trace, certified: true, evaluated });
            }
            Scan::OutOfWork(work) => {
                evaluated += work;
                return Ok(LocalSearchResult { solution: current, trace, certified: false, evaluated });
            }
        }
    }
}

enum Scan {
    Improved(SwapMove, u64),
    Optimal(u64),
    OutOfWork(u64),
}

/// First improving move in canonical order: single additions (while below
/// budget), then removal sets by size and lexicographically, each followed
/// by insertion sets by size and lexicographically.
fn first_improvement(inst: &CoverageInstance, current: &Solution, b: usize, budget: u64) -> Scan {
    let mut work = 0u64;
    let in_sol: Vec<bool> = (0..inst.family_size()).map(|i| current.chosen.binary_search(&i).is_ok()).collect();
    let outside: Vec<usize> = (0..inst.family_size()).filter(|&i| !in_sol[i]).collect();
    let base = inst.union_of(&current.chosen);
    let base_count = current.coverage as i64;

    if current.chosen.len() < inst.budget() {
        for &j in &outside {
            if work == budget {
                return Scan::OutOfWork(work);
            }
            work += 1;
            let gain = inst.set(j).difference_count(&base) as i64;
            if gain > 0 {
                return Scan::Improved(SwapMove { out: vec![], into: vec![j], gain }, work);
            }
        }
    }

    let mut kept = FixedBitSet::with_capacity(inst.universe_size());
    let mut trial = FixedBitSet::with_capacity(inst.universe_size());
    for size in 1..=b.min(current.chosen.len()) {
        for out in current.chosen.iter().copied().combinations(size) {
            kept.clear();
            for &i in &current.chosen {
                if !out.contains(&i) {
                    kept.union_with(inst.set(i));
                }
            }
            let kept_count = kept.count_ones(..) as i64;
            for into_size in 1..=size.min(outside.len()) {
                for into in outside.iter().copied().combinations(into_size) {
                    if work == budget {
                        return Scan::OutOfWork(work);
                    }
                    work += 1;
                    let count = if into_size == 1 {
                        kept_count + inst.set(into[0]).difference_count(&kept) as i64
                    } else {
                        trial.clone_from(&kept);
                        for &j in &into {
                            trial.union_with(inst.set(j));
                        }
                        trial.count_ones(..) as i64
                    };
                    if count > base_count {
                        return Scan::Improved(SwapMove { out, into, gain: count - base_count }, work);
                    }
                }
            }
        }
    }
    Scan::Optimal(work)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coverage::brute_force_mc;

    fn six() -> CoverageInstance {
        CoverageInstance::new(6, vec![vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]], 2).unwrap()
    }

    #[test]
    fn one_swap_reaches_optimum() {
        let inst = six();
        let res = local_search_mc(&inst, 1, None).unwrap();
        assert_eq!(res.solution.coverage, 6);
        assert_eq!(res.trace.len(), 1);
        assert_eq!(res.trace[0], SwapMove { out: vec![0], into: vec![2], gain: 1 });
        assert!(res.certified);
    }

    #[test]
    fn optimal_init_is_a_fixed_point() {
        let inst = six();
        let opt = brute_force_mc(&inst).unwrap();
        let res = local_search_mc(&inst, 2, Some(opt.clone())).unwrap();
        assert!(res.trace.is_empty());
        assert_eq!(res.solution, opt);
    }

    #[test]
    fn empty_init_fills_budget() {
        let inst = six();
        let config = LocalSearchConfig { init: Init::Empty, ..LocalSearchConfig::new(1) };
        let res = local_search_with(&inst, &config).unwrap();
        assert_eq!(res.trace[0].out, Vec::<usize>::new());
        assert_eq!(res.solution.coverage, 6);
        assert!(res.solution.chosen.len() <= 2);
    }

    #[test]
    fn work_limit_is_reported() {
        let inst = six();
        let config = LocalSearchConfig { work_limit: 1, ..LocalSearchConfig::new(2) };
        let res = local_search_with(&inst, &config).unwrap();
        assert!(!res.certified);
    }

    #[test]
    fn zero_b_is_rejected() {
        assert!(local_search_mc(&six(), 0, None).is_err());
    }
}
