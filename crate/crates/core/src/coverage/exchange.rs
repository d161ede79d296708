//! Exchange graphs: a graph on two disjoint solutions in which every
//! element covered by both sides is witnessed by an edge between a set of
//! each side that both contain it.

use std::collections::BTreeSet;

use super::{CoverageError, CoverageInstance};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// The local optimum under analysis.
    A,
    /// The comparison solution.
    O,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    VertexCover,
    DominatingSet,
    Custom(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    /// Node `i` is the family set `nodes[i].1` taken from solution `nodes[i].0`.
    pub nodes: Vec<(Side, usize)>,
    /// Node index pairs with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Cyclic neighbor order per node when the construction preserves an
    /// embedding.
    pub rotation: Option<Vec<Vec<usize>>>,
    pub provenance: Provenance,
}

impl ExchangeGraph {
    pub fn node_of(&self, side: Side, set: usize) -> Option<usize> {
        self.nodes.iter().position(|&n| n == (side, set))
    }

    /// The graph with color 0 on `O` nodes and color 1 on `A` nodes.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::from_edges(self.nodes.len(), &self.edges).expect("exchange edges are simple");
        if let Some(rot) = &self.rotation {
            g = g.with_rotation(rot.clone()).expect("rotation matches edges");
        }
        let colors = self.nodes.iter().map(|&(s, _)| if s == Side::O { 0 } else { 1 }).collect();
        g.with_colors(colors, 2).expect("two colors")
    }
}

/// Builds exchange graphs for pairs of disjoint solutions.
pub trait ExchangeProvider: Send + Sync {
    fn provenance(&self) -> Provenance;

    fn build(&self, inst: &CoverageInstance, a: &[usize], o: &[usize]) -> Result<ExchangeGraph, CoverageError>;
}

/// Provider for the vertex cover and dominating set reductions of a graph,
/// where family index `v` is vertex `v`.
#[derive(Debug, Clone)]
pub struct GraphProvider {
    pub graph: Graph,
    pub dominating: bool,
}

impl ExchangeProvider for GraphProvider {
    fn provenance(&self) -> Provenance {
        if self.dominating {
            Provenance::DominatingSet
        } else {
            Provenance::VertexCover
        }
    }

    fn build(&self, _inst: &CoverageInstance, a: &[usize], o: &[usize]) -> Result<ExchangeGraph, CoverageError> {
        if self.dominating {
            exchange_graph_md(&self.graph, a, o)
        } else {
            exchange_graph_mvc(&self.graph, a, o)
        }
    }
}

struct Sides {
    side: Vec<Option<Side>>,
    nodes: Vec<(Side, usize)>,
    index: Vec<usize>,
}

fn sides(g: &Graph, d: &[usize], d2: &[usize]) -> Result<Sides, CoverageError> {
    let mut side = vec![None; g.n()];
    for (s, set) in [(Side::A, d), (Side::O, d2)] {
        for &v in set {
            if v >= g.n() {
                return Err(CoverageError::UnknownSet(v));
            }
            if side[v].is_some() {
                return Err(CoverageError::OverlappingSolutions(v));
            }
            side[v] = Some(s);
        }
    }
    let mut nodes: Vec<(Side, usize)> = d.iter().map(|&v| (Side::A, v)).collect();
    nodes.sort_unstable();
    let mut rest: Vec<(Side, usize)> = d2.iter().map(|&v| (Side::O, v)).collect();
    rest.sort_unstable();
    nodes.extend(rest);
    let mut index = vec![usize::MAX; g.n()];
    for (i, &(_, v)) in nodes.iter().enumerate() {
        index[v] = i;
    }
    Ok(Sides { side, nodes, index })
}

/// Restricts `g`'s rotation to the edge set `adj` (adjacency on vertex ids)
/// and renames vertices to node indices.
fn restricted_rotation(g: &Graph, keep: &[usize], adj: &[BTreeSet<usize>]) -> Option<Vec<Vec<usize>>> {
    let rot = g.rotation()?;
    Some(
        keep.iter()
            .map(|&v| rot[v].iter().copied().filter(|w| adj[v].contains(w)).collect())
            .collect(),
    )
}

fn finish(
    sides: Sides,
    adj: Vec<BTreeSet<usize>>,
    rot: Option<Vec<Vec<usize>>>,
    provenance: Provenance,
) -> ExchangeGraph {
    let idx = &sides.index;
    let mut edges = Vec::new();
    for &(_, v) in &sides.nodes {
        for &w in &adj[v] {
            let (a, b) = (idx[v], idx[w]);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    let rotation = rot.map(|r| r.into_iter().map(|order| order.into_iter().map(|w| idx[w]).collect()).collect());
    ExchangeGraph { nodes: sides.nodes, edges, rotation, provenance }
}

/// Vertex cover exchange graph: edge `uu'` for every graph edge with
/// `u in D` and `u' in D'`. A subgraph of `g`.
pub fn exchange_graph_mvc(g: &Graph, d: &[usize], d2: &[usize]) -> Result<ExchangeGraph, CoverageError> {
    let s = sides(g, d, d2)?;
    let mut adj = vec![BTreeSet::new(); g.n()];
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (s.side[u], s.side[v]) {
            if a != b {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    let keep: Vec<usize> = s.nodes.iter().map(|&(_, v)| v).collect();
    let rot = restricted_rotation(g, &keep, &adj);
    Ok(finish(s, adj, rot, Provenance::VertexCover))
}

/// Dominating set exchange graph. For each vertex `u` dominated by both
/// sides: if `u` is on one side, join it to its lowest-index neighbor on
/// the other side; otherwise add `u` joined to its lowest-index neighbor on
/// each side, then contract `u` into its `D` neighbor. A minor of `g`.
pub fn exchange_graph_md(g: &Graph, d: &[usize], d2: &[usize]) -> Result<ExchangeGraph, CoverageError> {
    let s = sides(g, d, d2)?;
    let n = g.n();
    let lowest = |u: usize, side: Side| g.neighbors(u).iter().copied().find(|&w| s.side[w] == Some(side));
    let mut adj = vec![BTreeSet::new(); n];
    let mut aux = Vec::new();
    for u in 0..n {
        let by_a = s.side[u] == Some(Side::A) || lowest(u, Side::A).is_some();
        let by_o = s.side[u] == Some(Side::O) || lowest(u, Side::O).is_some();
        if !(by_a && by_o) {
            continue;
        }
        match s.side[u] {
            Some(side) => {
                let other = if side == Side::A { Side::O } else { Side::A };
                let v = lowest(u, other).expect("dominated by the other side");
                adj[u].insert(v);
                adj[v].insert(u);
            }
            None => {
                let v = lowest(u, Side::A).unwrap();
                let v2 = lowest(u, Side::O).unwrap();
                for w in [v, v2] {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
                aux.push(u);
            }
        }
    }
    let mut rot = g.rotation().map(|r| {
        (0..n)
            .map(|v| r[v].iter().copied().filter(|w| adj[v].contains(w)).collect::<Vec<usize>>())
            .collect::<Vec<_>>()
    });
    for u in aux {
        let v = *adj[u].iter().find(|&&w| s.side[w] == Some(Side::A)).unwrap();
        let v2 = *adj[u].iter().find(|&&w| s.side[w] == Some(Side::O)).unwrap();
        adj[u].clear();
        adj[v].remove(&u);
        adj[v2].remove(&u);
        let parallel = adj[v].contains(&v2);
        if let Some(rot) = rot.as_mut() {
            rot[u].clear();
            for (x, y) in [(v, v2), (v2, v)] {
                let pos = rot[x].iter().position(|&w| w == u).unwrap();
                if parallel {
                    rot[x].remove(pos);
                } else {
                    rot[x][pos] = y;
                }
            }
        }
        adj[v].insert(v2);
        adj[v2].insert(v);
    }
    let rot = rot.map(|r| s.nodes.iter().map(|&(_, v)| r[v].clone()).collect());
    Ok(finish(s, adj, rot, Provenance::DominatingSet))
}

/// Elements covered by both `a` and `o` that no edge of `h` witnesses,
/// found by scanning every cross edge. Empty when the exchange property
/// holds.
pub fn check_exchange_property(inst: &CoverageInstance, a: &[usize], o: &[usize], h: &ExchangeGraph) -> Vec<usize> {
    let universe = inst.universe_size();
    let mut in_a = vec![false; universe];
    let mut in_o = vec![false; universe];
    for (sets, mark) in [(a, &mut in_a), (o, &mut in_o)] {
        for &i in sets {
            for e in inst.members(i) {
                mark[e] = true;
            }
        }
    }
    let mut witnessed = vec![false; universe];
    for &(x, y) in &h.edges {
        let (sx, ix) = h.nodes[x];
        let (sy, iy) = h.nodes[y];
        if sx == sy {
            continue;
        }
        let (set_a, set_o) = if sx == Side::A { (ix, iy) } else { (iy, ix) };
        if !a.contains(&set_a) || !o.contains(&set_o) {
            continue;
        }
        let other: BTreeSet<usize> = inst.members(set_o).into_iter().collect();
        for e in inst.members(set_a) {
            if other.contains(&e) {
                witnessed[e] = true;
            }
        }
    }
    (0..universe).filter(|&e| in_a[e] && in_o[e] && !witnessed[e]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coverage::{reduce_md, reduce_mvc};
    use crate::generators::{path, star};
    use crate::graph::validate_graph;

    #[test]
    fn mvc_path_single_edge() {
        let g = path(4);
        let h = exchange_graph_mvc(&g, &[1], &[2]).unwrap();
        assert_eq!(h.nodes, vec![(Side::A, 1), (Side::O, 2)]);
        assert_eq!(h.edges, vec![(0, 1)]);
        let inst = reduce_mvc(&g, 1).unwrap();
        assert!(check_exchange_property(&inst, &[1], &[2], &h).is_empty());
    }

    #[test]
    fn mvc_disjoint_coverage_has_no_edges() {
        let g = path(5);
        let h = exchange_graph_mvc(&g, &[0], &[3]).unwrap();
        assert!(h.edges.is_empty());
    }

    #[test]
    fn md_star_and_path() {
        let h = exchange_graph_md(&star(4), &[0], &[2]).unwrap();
        assert_eq!(h.edges, vec![(0, 1)]);
        let g = path(5);
        let h = exchange_graph_md(&g, &[1], &[3]).unwrap();
        assert_eq!(h.nodes, vec![(Side::A, 1), (Side::O, 3)]);
        assert_eq!(h.edges, vec![(0, 1)]);
        let inst = reduce_md(&g, 1).unwrap();
        assert!(check_exchange_property(&inst, &[1], &[3], &h).is_empty());
        assert!(validate_graph(&h.to_graph()).is_valid());
    }

    #[test]
    fn overlap_is_rejected() {
        assert_eq!(exchange_graph_mvc(&path(3), &[1], &[1]), Err(CoverageError::OverlappingSolutions(1)));
    }

    #[test]
    fn missing_edge_is_detected() {
        let g = path(4);
        let inst = reduce_mvc(&g, 1).unwrap();
        let h = ExchangeGraph {
            nodes: vec![(Side::A, 1), (Side::O, 2)],
            edges: vec![],
            rotation: None,
            provenance: Provenance::Custom("empty".into()),
        };
        assert_eq!(check_exchange_property(&inst, &[1], &[2], &h), vec![1]);
    }
}
