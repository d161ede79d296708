//! Undirected simple graphs with an optional combinatorial embedding and an
//! optional vertex coloring.

mod embedding;
mod io;
mod validate;

pub use embedding::{count_faces, face_count_by_component};
pub use io::ParseGraphError;
pub use validate::{validate_graph, ValidationReport, Violation};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    BadRotation(usize),
    #[error("rotation system has {0} entries, expected {1}")]
    RotationLength(usize, usize),
    #[error("color list has {0} entries, expected {1}")]
    ColorLength(usize, usize),
    #[error("vertex {0} has color {1}, expected a value below {2}")]
    ColorOutOfRange(usize, usize, usize),
}

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted. The rotation system, when present, lists
/// each vertex's neighbors in cyclic (counter-clockwise) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    rotation: Option<Vec<Vec<usize>>>,
    colors: Option<Vec<usize>>,
    color_count: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            rotation: None,
            colors: None,
            color_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            rotation: None,
            colors: None,
            color_count: 0,
        })
    }

    /// Builds a graph directly from per-vertex lists without any checking.
    ///
    /// Used to feed possibly malformed data to [`validate_graph`].
    pub fn from_raw_parts(
        adjacency: Vec<Vec<usize>>,
        rotation: Option<Vec<Vec<usize>>>,
        colors: Option<(Vec<usize>, usize)>,
    ) -> Self {
        let (colors, color_count) = match colors {
            Some((c, d)) => (Some(c), d),
            None => (None, 0),
        };
        Graph {
            adjacency,
            rotation,
            colors,
            color_count,
        }
    }

    /// Attaches a rotation system; each entry must be a permutation of the
    /// vertex's neighbor list.
    pub fn with_rotation(mut self, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if rotation.len() != self.n() {
            return Err(GraphError::RotationLength(rotation.len(), self.n()));
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != self.adjacency[v] {
                return Err(GraphError::BadRotation(v));
            }
        }
        self.rotation = Some(rotation);
        Ok(self)
    }

    pub fn with_colors(mut self, colors: Vec<usize>, color_count: usize) -> Result<Self, GraphError> {
        if colors.len() != self.n() {
            return Err(GraphError::ColorLength(colors.len(), self.n()));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= color_count) {
            return Err(GraphError::ColorOutOfRange(v, c, color_count));
        }
        self.colors = Some(colors);
        self.color_count = color_count;
        Ok(self)
    }

    pub fn without_colors(mut self) -> Self {
        self.colors = None;
        self.color_count = 0;
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        self.rotation.as_deref()
    }

    pub fn colors(&self) -> Option<&[usize]> {
        self.colors.as_deref()
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Connected components of the graph with the `blocked` vertices removed.
    pub fn components_avoiding(&self, blocked: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = blocked.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// The subgraph induced by `vertices`, relabelled to `0..vertices.len()`
    /// in the given order. Rotation and colors are restricted accordingly.
    ///
    /// Returns the subgraph together with the local-to-global vertex map.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let map_list = |list: &[usize]| -> Vec<usize> {
            list.iter()
                .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                .collect()
        };
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut l = map_list(&self.adjacency[v]);
                l.sort_unstable();
                l
            })
            .collect();
        let rotation = self
            .rotation
            .as_ref()
            .map(|rot| vertices.iter().map(|&v| map_list(&rot[v])).collect());
        let colors = self
            .colors
            .as_ref()
            .map(|c| vertices.iter().map(|&v| c[v]).collect());
        (
            Graph {
                adjacency,
                rotation,
                colors,
                color_count: self.color_count,
            },
            vertices.to_vec(),
        )
    }

    /// Open neighborhood of a vertex set: vertices outside `set` adjacent to it.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = std::collections::HashSet::with_capacity(set.len());
        inside.extend(set.iter().copied());
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&v| self.adjacency[v].iter().copied())
            .filter(|w| !inside.contains(w))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_defects() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange(..))
        ));
    }

    #[test]
    fn induced_subgraph_restricts_rotation() {
        // square 0-1-2-3 with rotation, drop vertex 3
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap()
            .with_rotation(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]])
            .unwrap();
        let (h, map) = g.induced_subgraph(&[0, 1, 2]);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.rotation().unwrap()[1], vec![2, 0]);
        assert_eq!(h.rotation().unwrap()[0], vec![1]);
    }

    #[test]
    fn neighborhood_and_components() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(g.neighborhood(&[1]), vec![0, 2]);
        let mut blocked = vec![false; 5];
        blocked[1] = true;
        assert_eq!(g.components_avoiding(&blocked).len(), 3);
    }
}
