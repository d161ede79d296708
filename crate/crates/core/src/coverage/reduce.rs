//! Vertex cover, dominating set and hitting problems as coverage instances.

use super::{CoverageError, CoverageInstance};
use crate::graph::Graph;

/// Universe = edges of `g` (in [`Graph::edges`] order); set `v` = edges at `v`.
pub fn reduce_mvc(g: &Graph, k: usize) -> Result<CoverageInstance, CoverageError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut family = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        family[u].push(e);
        family[v].push(e);
    }
    CoverageInstance::new(edges.len(), family, k)
}

/// Universe = vertices; set `v` = closed neighborhood `N[v]`.
pub fn reduce_md(g: &Graph, k: usize) -> Result<CoverageInstance, CoverageError> {
    let family = (0..g.n())
        .map(|v| {
            let mut s = g.neighbors(v).to_vec();
            s.push(v);
            s
        })
        .collect();
    CoverageInstance::new(g.n(), family, k)
}

/// Universe = ranges; set `p` = the ranges containing point `p`.
pub fn reduce_mh(ranges: &[Vec<usize>], points: usize, k: usize) -> Result<CoverageInstance, CoverageError> {
    let mut family = vec![Vec::new(); points];
    for (r, range) in ranges.iter().enumerate() {
        for &p in range {
            if p >= points {
                return Err(CoverageError::InvalidParameter(format!("range {r} contains unknown point {p}")));
            }
            family[p].push(r);
        }
    }
    CoverageInstance::new(ranges.len(), family, k)
}
