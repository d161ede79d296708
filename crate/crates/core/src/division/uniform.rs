//! Uniform divisions: parts with `|V_i|` in `[r/2, 2r]`, obtained by
//! grouping the parts of a finer division.

use super::{rf_division_with, Division, DivisionError, SizeMeasure, WindowBound};
use crate::graph::Graph;
use crate::separator::SeparatorOracle;

/// Bookkeeping of one grouping run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformTrace {
    /// The finer division's parts, largest first.
    pub base_sizes: Vec<usize>,
    /// `n* = sum |U_j|`.
    pub n_star: usize,
    pub t: usize,
    /// Number of base parts placed by the greedy first step.
    pub greedy_placed: usize,
    /// Group index of every base part (in `base_sizes` order).
    pub groups: Vec<Vec<usize>>,
}

pub fn uniform_division(g: &Graph, oracle: &dyn SeparatorOracle, r: usize) -> Result<Division, DivisionError> {
    uniform_division_traced(g, oracle, r).map(|(d, _)| d)
}

/// Builds a division at `floor(r/8)` where every region has at most
/// `floor(r/8)` interior vertices, sorts its parts `U_1 >= ... >= U_l` by
/// size (ties: smallest vertex first), and groups them into
/// `t = ceil(n*/r)` parts.
///
/// Step 1 walks the `U_j` in order and gives each to the group of minimum
/// size (lowest index on ties) among groups holding fewer than
/// `32 c_l / c* = 4 l r / n*` pieces, provided that group has at most
/// `n*/t` vertices; otherwise Step 2 deals the remaining pieces out
/// round-robin.
///
/// The feasible window is `r >= 8` with a nonempty base division, and
/// `r <= n*/3`.
pub fn uniform_division_traced(
    g: &Graph,
    oracle: &dyn SeparatorOracle,
    r: usize,
) -> Result<(Division, UniformTrace), DivisionError> {
    let n = g.n();
    if n < 8 {
        let parts = if n == 0 { vec![] } else { vec![(0..n).collect()] };
        let trace = UniformTrace {
            base_sizes: vec![n],
            n_star: n,
            t: parts.len(),
            greedy_placed: parts.len(),
            groups: if n == 0 { vec![] } else { vec![vec![0]] },
        };
        return Ok((Division::from_parts(g, vec![], parts, r), trace));
    }
    if r < 8 {
        return Err(DivisionError::ParameterOutOfWindow {
            r,
            bound: WindowBound::Lower,
            detail: "the base division needs floor(r/8) >= 1, so r >= 8".into(),
        });
    }
    let base = rf_division_with(g, oracle, r / 8, SizeMeasure::Interior)?;
    let mut u = base.parts.clone();
    u.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let n_star: usize = u.iter().map(Vec::len).sum();
    if n_star == 0 {
        return Err(DivisionError::ParameterOutOfWindow {
            r,
            bound: WindowBound::Lower,
            detail: "the base division has no interior vertices (c* = 0)".into(),
        });
    }
    if 3 * r > n_star {
        return Err(DivisionError::ParameterOutOfWindow {
            r,
            bound: WindowBound::Upper,
            detail: format!("need r <= n*/3 with n* = {n_star} (x0 = 3/c*, c* = n*/n = {n_star}/{n})"),
        });
    }
    let l = u.len();
    let t = n_star.div_ceil(r);

    let mut size = vec![0usize; t];
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); t];
    // |I_i| < 4 l r / n*  <=>  |I_i| * n* < 4 l r
    let below_cap = |count: usize| count * n_star < 4 * l * r;
    let mut next = 0;
    while next < l {
        let candidate = (0..t).filter(|&i| below_cap(groups[i].len())).min_by_key(|&i| (size[i], i));
        match candidate {
            Some(i) if size[i] * t <= n_star => {
                size[i] += u[next].len();
                groups[i].push(next);
                next += 1;
            }
            _ => break,
        }
    }
    let greedy_placed = next;
    for (offset, j) in (next..l).enumerate() {
        let i = offset % t;
        size[i] += u[j].len();
        groups[i].push(j);
    }

    let parts: Vec<Vec<usize>> =
        groups.iter().map(|grp| grp.iter().flat_map(|&j| u[j].iter().copied()).collect()).collect();
    let division = Division::from_parts(g, base.boundary.clone(), parts, r);
    let trace = UniformTrace { base_sizes: u.iter().map(Vec::len).collect(), n_star, t, greedy_placed, groups };
    Ok((division, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division::{verify_division, SizeRule};
    use crate::generators::{grid, path, triangulated_grid};
    use crate::separator::PlanarSeparator;

    fn check(g: &Graph, r: usize) -> Division {
        let (d, trace) = uniform_division_traced(g, &PlanarSeparator, r).unwrap();
        let rep = verify_division(g, &d, SizeRule::Uniform);
        assert!(rep.violations.is_empty(), "r={r}: {:?}", rep.violations);
        assert!(trace.base_sizes.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(trace.t, trace.n_star.div_ceil(r));
        d
    }

    #[test]
    fn grid_parts_in_range() {
        let g = grid(16, 16);
        let d = check(&g, 32);
        assert!(d.parts.iter().all(|p| (16..=64).contains(&p.len())));
    }

    #[test]
    fn long_path() {
        check(&path(1000), 40);
    }

    #[test]
    fn triangulated_grids() {
        for r in [8, 16, 24] {
            check(&triangulated_grid(20, 20, None), r);
        }
    }

    #[test]
    fn disconnected_input() {
        let a = grid(12, 12);
        let mut edges: Vec<(usize, usize)> = a.edges().collect();
        edges.extend(a.edges().map(|(u, v)| (u + 144, v + 144)));
        let mut rot: Vec<Vec<usize>> = a.rotation().unwrap().to_vec();
        rot.extend(a.rotation().unwrap().iter().map(|l| l.iter().map(|v| v + 144).collect::<Vec<_>>()));
        let g = Graph::from_edges(288, &edges).unwrap().with_rotation(rot).unwrap();
        check(&g, 16);
    }

    #[test]
    fn window_errors() {
        let g = grid(10, 10);
        assert!(matches!(
            uniform_division(&g, &PlanarSeparator, 4),
            Err(DivisionError::ParameterOutOfWindow { bound: WindowBound::Lower, .. })
        ));
        assert!(matches!(
            uniform_division(&g, &PlanarSeparator, 80),
            Err(DivisionError::ParameterOutOfWindow { bound: WindowBound::Upper, .. })
        ));
    }

    #[test]
    fn tiny_graph_is_trivial() {
        let d = uniform_division(&path(5), &PlanarSeparator, 16).unwrap();
        assert_eq!(d.t(), 1);
    }
}
