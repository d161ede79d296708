//! `(r, f(r))`-divisions and uniform divisions.
//!
//! A division partitions `V` into a boundary set `X` and parts
//! `V_1, ..., V_t` such that no part is adjacent to another part.

mod io;
mod rdivision;
mod uniform;
mod verify;

pub use io::ParseDivisionError;
pub use rdivision::{rf_division, rf_division_with, SizeMeasure};
pub use uniform::{uniform_division, uniform_division_traced, UniformTrace};
pub use verify::{verify_division, verify_division_with, DivisionReport, SizeRule};

use thiserror::Error;

use crate::graph::Graph;
use crate::separator::SeparatorError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("r = {r} is outside the feasible window ({bound}): {detail}")]
    ParameterOutOfWindow { r: usize, bound: WindowBound, detail: String },
    #[error("separator oracle failed: {0}")]
    Oracle(#[from] SeparatorError),
}

/// Which end of the feasible window `[r0, n / x0]` was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowBound {
    Lower,
    Upper,
}

impl std::fmt::Display for WindowBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WindowBound::Lower => write!(f, "lower bound r0"),
            WindowBound::Upper => write!(f, "upper bound n / x0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    /// The boundary set `X`, sorted.
    pub boundary: Vec<usize>,
    /// Parts `V_1, ..., V_t`, each sorted.
    pub parts: Vec<Vec<usize>>,
    /// `N(V_i) ∩ X` for each part, sorted.
    pub part_boundary: Vec<Vec<usize>>,
    pub r: usize,
}

impl Division {
    /// Builds a division from its boundary and parts, computing the part
    /// boundaries from `g`.
    pub fn from_parts(g: &Graph, mut boundary: Vec<usize>, mut parts: Vec<Vec<usize>>, r: usize) -> Division {
        boundary.sort_unstable();
        for p in parts.iter_mut() {
            p.sort_unstable();
        }
        let mut in_x = vec![false; g.n()];
        for &v in &boundary {
            in_x[v] = true;
        }
        let part_boundary = parts
            .iter()
            .map(|p| g.neighborhood(p).into_iter().filter(|&v| in_x[v]).collect())
            .collect();
        Division { boundary, parts, part_boundary, r }
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    /// Part index of every vertex, `None` for boundary vertices.
    pub fn part_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                out[v] = Some(i);
            }
        }
        out
    }

    /// Merges groups of parts into single parts; `groups[j]` lists the part
    /// indices forming new part `j`.
    pub fn merge(&self, g: &Graph, groups: &[Vec<usize>], r: usize) -> Division {
        let parts = groups
            .iter()
            .map(|grp| grp.iter().flat_map(|&i| self.parts[i].iter().copied()).collect())
            .collect();
        Division::from_parts(g, self.boundary.clone(), parts, r)
    }
}
