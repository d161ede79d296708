//! `(r, f(r))`-divisions by recursive separation.

use super::{Division, DivisionError};
use crate::graph::Graph;
use crate::separator::SeparatorOracle;

/// How region size is compared against `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeMeasure {
    /// `|R ∪ N(R)|`, the measure of the classical division.
    Closed,
    /// `|R|`, interior vertices only.
    Interior,
}

/// `(r, f(r))`-division with `|V_i ∪ N(V_i)| <= r` for every part.
pub fn rf_division(g: &Graph, oracle: &dyn SeparatorOracle, r: usize) -> Result<Division, DivisionError> {
    rf_division_with(g, oracle, r, SizeMeasure::Closed)
}

/// Two phases. First, regions (components of `G - X`) larger than `r` under
/// `measure` are separated recursively, the separators joining `X`; regions
/// of at most two vertices that are still too large join `X` entirely.
/// Second, regions with more than `ceil(f(r))` boundary vertices are split
/// by separators that weight each boundary vertex onto its lowest-index
/// neighbor inside the region.
pub fn rf_division_with(
    g: &Graph,
    oracle: &dyn SeparatorOracle,
    r: usize,
    measure: SizeMeasure,
) -> Result<Division, DivisionError> {
    if r < 1 {
        return Err(DivisionError::InvalidParameter("r must be at least 1".into()));
    }
    let n = g.n();
    let mut in_x = vec![false; n];
    let boundary_of = |region: &[usize], in_x: &[bool]| -> Vec<usize> {
        g.neighborhood(region).into_iter().filter(|&v| in_x[v]).collect()
    };

    let mut pending = g.components();
    let mut small = Vec::new();
    while let Some(region) = pending.pop() {
        let size = match measure {
            SizeMeasure::Interior => region.len(),
            SizeMeasure::Closed => region.len() + boundary_of(&region, &in_x).len(),
        };
        if size <= r {
            small.push(region);
            continue;
        }
        if region.len() <= 2 {
            for &v in &region {
                in_x[v] = true;
            }
            continue;
        }
        let (sub, map) = g.induced_subgraph(&region);
        let sep = oracle.separate(&sub)?;
        split(&sub, &map, &sep.separator, &mut in_x, &mut pending);
    }

    let limit = oracle.bound().eval(r as f64).ceil() as usize;
    let mut done = Vec::new();
    let mut pending = small;
    while let Some(region) = pending.pop() {
        let bnd = boundary_of(&region, &in_x);
        if bnd.len() <= limit || region.len() <= 2 {
            done.push(region);
            continue;
        }
        let (sub, map) = g.induced_subgraph(&region);
        let mut local = vec![usize::MAX; n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut weights = vec![0u64; sub.n()];
        for &x in &bnd {
            let anchor = g.neighbors(x).iter().find(|&&w| local[w] != usize::MAX).unwrap();
            weights[local[*anchor]] += 1;
        }
        let sep = oracle.separate_weighted(&sub, &weights)?;
        if sep.separator.is_empty() {
            done.push(region);
            continue;
        }
        split(&sub, &map, &sep.separator, &mut in_x, &mut pending);
    }

    let boundary: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    let mut parts = g.components_avoiding(&in_x);
    parts.sort_by_key(|p| p[0]);
    Ok(Division::from_parts(g, boundary, parts, r))
}

/// Moves the separator into `X` and queues the remaining components.
fn split(sub: &Graph, map: &[usize], separator: &[usize], in_x: &mut [bool], pending: &mut Vec<Vec<usize>>) {
    let mut blocked = vec![false; sub.n()];
    for &v in separator {
        blocked[v] = true;
        in_x[map[v]] = true;
    }
    for comp in sub.components_avoiding(&blocked) {
        let mut global: Vec<usize> = comp.into_iter().map(|v| map[v]).collect();
        global.sort_unstable();
        pending.push(global);
    }
}
