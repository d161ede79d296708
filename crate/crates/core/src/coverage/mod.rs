//! Cardinality-constrained maximum coverage: instances, baselines, swap
//! local search, exchange graphs and the proof replay.

mod exact;
mod exchange;
mod greedy;
mod io;
mod local_search;
mod reduce;
mod replay;
mod verify;

pub use exact::{brute_force_mc, BRUTE_FORCE_LIMIT};
pub use exchange::{
    check_exchange_property, exchange_graph_md, exchange_graph_mvc, ExchangeGraph, ExchangeProvider, GraphProvider,
    Provenance, Side,
};
pub use greedy::greedy_mc;
pub use io::{parse_trace, trace_to_text, InstanceFile, SolutionFile};
pub use local_search::{local_search_mc, local_search_with, Init, LocalSearchConfig, LocalSearchResult, SwapMove};
pub use reduce::{reduce_md, reduce_mh, reduce_mvc};
pub use replay::{analysis_replay, AnalysisReplay, CandidateSwap, PartReplay, ReplayConfig};
pub use verify::{count_swaps, verify_local_optimum, LocalOptimality, VERIFY_LIMIT};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::balancing::BalanceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverageError {
    #[error("set {set} contains element {element} outside the universe of size {universe}")]
    ElementOutOfRange { set: usize, element: usize, universe: usize },
    #[error("budget {budget} exceeds family size {family}")]
    BudgetTooLarge { budget: usize, family: usize },
    #[error("enumeration needs {needed} candidates, limit is {limit}")]
    SizeLimitExceeded { needed: u128, limit: u128 },
    #[error("solution index {0} is not a family member")]
    UnknownSet(usize),
    #[error("solution lists set {0} twice")]
    RepeatedSet(usize),
    #[error("solution has {size} sets, budget is {budget}")]
    OverBudget { size: usize, budget: usize },
    #[error("solutions share {0}")]
    OverlappingSolutions(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Division(#[from] BalanceError),
}

/// Universe `0..universe_size`, a family of subsets and a budget `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageInstance {
    universe_size: usize,
    family: Vec<FixedBitSet>,
    budget: usize,
    labels: Option<Vec<String>>,
}

impl CoverageInstance {
    pub fn new(universe_size: usize, family: Vec<Vec<usize>>, budget: usize) -> Result<Self, CoverageError> {
        if budget > family.len() {
            return Err(CoverageError::BudgetTooLarge { budget, family: family.len() });
        }
        let mut sets = Vec::with_capacity(family.len());
        for (i, members) in family.into_iter().enumerate() {
            let mut s = FixedBitSet::with_capacity(universe_size);
            for e in members {
                if e >= universe_size {
                    return Err(CoverageError::ElementOutOfRange { set: i, element: e, universe: universe_size });
                }
                s.insert(e);
            }
            sets.push(s);
        }
        Ok(CoverageInstance { universe_size, family: sets, budget, labels: None })
    }

    /// Instance over arbitrary element labels. Elements are numbered in
    /// order of first appearance; the labels are kept alongside.
    pub fn from_labeled<L: ToString>(family: Vec<Vec<L>>, budget: usize) -> Result<Self, CoverageError> {
        let mut index = std::collections::HashMap::new();
        let mut labels = Vec::new();
        let numbered: Vec<Vec<usize>> = family
            .into_iter()
            .map(|set| {
                set.into_iter()
                    .map(|l| {
                        let key = l.to_string();
                        *index.entry(key.clone()).or_insert_with(|| {
                            labels.push(key);
                            labels.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let mut inst = Self::new(labels.len(), numbered, budget)?;
        inst.labels = Some(labels);
        Ok(inst)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn family_size(&self) -> usize {
        self.family.len()
    }

    pub fn set(&self, i: usize) -> &FixedBitSet {
        &self.family[i]
    }

    pub fn family(&self) -> &[FixedBitSet] {
        &self.family
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_budget(&self, budget: usize) -> Result<Self, CoverageError> {
        if budget > self.family.len() {
            return Err(CoverageError::BudgetTooLarge { budget, family: self.family.len() });
        }
        Ok(CoverageInstance { budget, ..self.clone() })
    }

    /// Sorted member lists of every set.
    pub fn members(&self, i: usize) -> Vec<usize> {
        self.family[i].ones().collect()
    }

    pub fn union_of(&self, chosen: &[usize]) -> FixedBitSet {
        let mut u = FixedBitSet::with_capacity(self.universe_size);
        for &i in chosen {
            u.union_with(&self.family[i]);
        }
        u
    }

    pub fn coverage_of(&self, chosen: &[usize]) -> usize {
        self.union_of(chosen).count_ones(..)
    }

    /// Checks that `chosen` lists distinct family members, at most `k`.
    pub fn check_selection(&self, chosen: &[usize]) -> Result<(), CoverageError> {
        let mut seen = vec![false; self.family.len()];
        for &i in chosen {
            if i >= self.family.len() {
                return Err(CoverageError::UnknownSet(i));
            }
            if seen[i] {
                return Err(CoverageError::RepeatedSet(i));
            }
            seen[i] = true;
        }
        if chosen.len() > self.budget {
            return Err(CoverageError::OverBudget { size: chosen.len(), budget: self.budget });
        }
        Ok(())
    }
}

/// A feasible selection together with its coverage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub chosen: Vec<usize>,
    pub coverage: usize,
}

impl Solution {
    pub fn new(inst: &CoverageInstance, mut chosen: Vec<usize>) -> Result<Self, CoverageError> {
        chosen.sort_unstable();
        inst.check_selection(&chosen)?;
        let coverage = inst.coverage_of(&chosen);
        Ok(Solution { chosen, coverage })
    }

    pub fn empty() -> Self {
        Solution { chosen: Vec::new(), coverage: 0 }
    }

    /// Recomputes the coverage and feasibility; returns a description of
    /// the first problem.
    pub fn validate(&self, inst: &CoverageInstance) -> Result<(), String> {
        inst.check_selection(&self.chosen).map_err(|e| e.to_string())?;
        let actual = inst.coverage_of(&self.chosen);
        if actual != self.coverage {
            return Err(format!("stored coverage {} but the union has {actual} elements", self.coverage));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn six() -> CoverageInstance {
        CoverageInstance::new(6, vec![vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]], 2).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(matches!(
            CoverageInstance::new(3, vec![vec![3]], 1),
            Err(CoverageError::ElementOutOfRange { .. })
        ));
        assert!(matches!(CoverageInstance::new(3, vec![vec![0]], 2), Err(CoverageError::BudgetTooLarge { .. })));
        let inst = six();
        assert_eq!(inst.coverage_of(&[1, 2]), 6);
        assert!(Solution::new(&inst, vec![0, 0]).is_err());
        assert!(Solution::new(&inst, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn labels_are_normalized() {
        let inst = CoverageInstance::from_labeled(vec![vec!["p", "q"], vec!["q", "r"]], 1).unwrap();
        assert_eq!(inst.universe_size(), 3);
        assert_eq!(inst.members(1), vec![1, 2]);
        assert_eq!(inst.labels().unwrap(), ["p", "q", "r"]);
    }
}
