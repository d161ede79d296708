//! Independent recomputation of division properties.

use super::Division;
use crate::graph::Graph;
use crate::separator::{FBound, PlanarSeparator, SeparatorOracle};

/// Size condition a division's parts are checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeRule {
    /// `|V_i ∪ N(V_i)| <= r`.
    Closed,
    /// `r/2 <= |V_i| <= 2r`.
    Uniform,
    /// `min <= |V_i| <= max`.
    Range { min: usize, max: usize },
    Any,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisionReport {
    pub t: usize,
    pub max_part_size: usize,
    pub min_part_size: usize,
    pub max_part_boundary: usize,
    /// `sum_i |N(V_i) ∩ X|`.
    pub boundary_total: usize,
    pub boundary_size: usize,
    /// `max_part_boundary / f(r)`.
    pub measured_c1: f64,
    /// `max(|X|, boundary_total) * r / (f(r) * n)`.
    pub measured_c2: f64,
    pub violations: Vec<String>,
}

impl DivisionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `d` with the planar separator's `f`.
pub fn verify_division(g: &Graph, d: &Division, rule: SizeRule) -> DivisionReport {
    verify_division_with(g, d, rule, &PlanarSeparator.bound())
}

pub fn verify_division_with(g: &Graph, d: &Division, rule: SizeRule, f: &FBound) -> DivisionReport {
    let n = g.n();
    let mut violations = Vec::new();

    // owner: usize::MAX = unassigned, t = boundary, i < t = part i
    let t = d.parts.len();
    let mut owner = vec![usize::MAX; n];
    let sets = std::iter::once((t, &d.boundary)).chain(d.parts.iter().enumerate());
    for (tag, set) in sets {
        for &v in set {
            if v >= n {
                violations.push(format!("vertex {v} out of range"));
            } else if owner[v] != usize::MAX {
                violations.push(format!("vertex {v} assigned twice"));
            } else {
                owner[v] = tag;
            }
        }
    }
    for v in 0..n {
        if owner[v] == usize::MAX {
            violations.push(format!("vertex {v} not assigned"));
        }
    }

    for u in 0..n {
        for &v in g.neighbors(u) {
            if u < v && owner[u] < t && owner[v] < t && owner[u] != owner[v] {
                violations.push(format!("edge ({u}, {v}) joins parts {} and {}", owner[u], owner[v]));
            }
        }
    }

    if d.part_boundary.len() != t {
        violations.push(format!("{} part boundaries for {t} parts", d.part_boundary.len()));
    }
    let mut seen = vec![usize::MAX; n];
    let mut sizes = Vec::with_capacity(t);
    let mut boundaries = Vec::with_capacity(t);
    for (i, part) in d.parts.iter().enumerate() {
        let mut outside = Vec::new();
        for &u in part.iter().filter(|&&u| u < n) {
            for &v in g.neighbors(u) {
                if owner[v] != i && seen[v] != i {
                    seen[v] = i;
                    outside.push(v);
                }
            }
        }
        let mut bnd: Vec<usize> = outside.iter().copied().filter(|&v| owner[v] == t).collect();
        bnd.sort_unstable();
        if d.part_boundary.get(i) != Some(&bnd) {
            violations.push(format!("stored boundary of part {i} differs from N(V_{i}) ∩ X"));
        }
        let size = part.len();
        match rule {
            SizeRule::Closed if size + outside.len() > d.r => {
                violations.push(format!("part {i}: |V ∪ N(V)| = {} > r = {}", size + outside.len(), d.r))
            }
            SizeRule::Uniform if 2 * size < d.r || size > 2 * d.r => {
                violations.push(format!("part {i}: |V| = {size} outside [r/2, 2r] for r = {}", d.r))
            }
            SizeRule::Range { min, max } if size < min || size > max => {
                violations.push(format!("part {i}: |V| = {size} outside [{min}, {max}]"))
            }
            _ => {}
        }
        sizes.push(size);
        boundaries.push(bnd.len());
    }

    let max_part_boundary = boundaries.iter().copied().max().unwrap_or(0);
    let boundary_total: usize = boundaries.iter().sum();
    let fr = f.eval(d.r as f64);
    let measured_c1 = if fr > 0.0 { max_part_boundary as f64 / fr } else { 0.0 };
    let measured_c2 = if fr > 0.0 && n > 0 {
        boundary_total.max(d.boundary.len()) as f64 * d.r as f64 / (fr * n as f64)
    } else {
        0.0
    };
    DivisionReport {
        t,
        max_part_size: sizes.iter().copied().max().unwrap_or(0),
        min_part_size: sizes.iter().copied().min().unwrap_or(0),
        max_part_boundary,
        boundary_total,
        boundary_size: d.boundary.len(),
        measured_c1,
        measured_c2,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn six_cycle_by_hand() {
        let g = cycle(6);
        let d = Division::from_parts(&g, vec![0, 3], vec![vec![1, 2], vec![4, 5]], 4);
        let rep = verify_division(&g, &d, SizeRule::Closed);
        assert!(rep.is_valid(), "{:?}", rep.violations);
        assert_eq!((rep.t, rep.max_part_size, rep.max_part_boundary, rep.boundary_total), (2, 2, 2, 4));
        assert!(verify_division(&g, &d, SizeRule::Uniform).is_valid());
    }

    #[test]
    fn adjacent_parts_are_flagged() {
        let g = cycle(6);
        let d = Division::from_parts(&g, vec![0], vec![vec![1, 2], vec![3, 4, 5]], 4);
        let rep = verify_division(&g, &d, SizeRule::Any);
        assert!(rep.violations.iter().any(|v| v.contains("joins parts")));
    }

    #[test]
    fn stale_boundary_and_missing_vertex() {
        let g = cycle(6);
        let mut d = Division::from_parts(&g, vec![0, 3], vec![vec![1, 2], vec![4]], 4);
        d.part_boundary[0] = vec![0];
        let rep = verify_division(&g, &d, SizeRule::Any);
        assert!(rep.violations.iter().any(|v| v.contains("stored boundary")));
        assert!(rep.violations.iter().any(|v| v.contains("vertex 5 not assigned")));
    }
}
