//! Planar graph and coverage instance generators. Planar generators emit a
//! straight-line rotation system.

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::coverage::CoverageInstance;
use crate::graph::Graph;
use crate::rng::Rng;

/// Rotation system of a straight-line drawing: neighbors sorted by angle.
pub fn embed_by_coordinates(g: Graph, coords: &[(f64, f64)]) -> Graph {
    let rotation = (0..g.n())
        .map(|v| {
            let (x0, y0) = coords[v];
            let mut order = g.neighbors(v).to_vec();
            order.sort_by(|&a, &b| {
                let ta = (coords[a].1 - y0).atan2(coords[a].0 - x0);
                let tb = (coords[b].1 - y0).atan2(coords[b].0 - x0);
                ta.partial_cmp(&tb).unwrap().then(a.cmp(&b))
            });
            order
        })
        .collect();
    g.with_rotation(rotation).expect("rotation built from adjacency")
}

fn grid_coords(width: usize, height: usize) -> Vec<(f64, f64)> {
    (0..width * height)
        .map(|v| ((v % width) as f64, (v / width) as f64))
        .collect()
}

fn grid_edges(width: usize, height: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for y in 0..height {
        for x in 0..width {
            let v = y * width + x;
            if x + 1 < width {
                edges.push((v, v + 1));
            }
            if y + 1 < height {
                edges.push((v, v + width));
            }
        }
    }
    edges
}

/// `width x height` grid; vertex `(x, y)` has index `y * width + x`.
pub fn grid(width: usize, height: usize) -> Graph {
    let g = Graph::from_edges(width * height, &grid_edges(width, height)).unwrap();
    embed_by_coordinates(g, &grid_coords(width, height))
}

/// Grid with one diagonal per cell. With `rng` the diagonal direction of each
/// cell is random, otherwise every cell gets the `(x, y)-(x+1, y+1)` diagonal.
pub fn triangulated_grid(width: usize, height: usize, mut rng: Option<&mut Rng>) -> Graph {
    let mut edges = grid_edges(width, height);
    for y in 0..height.saturating_sub(1) {
        for x in 0..width.saturating_sub(1) {
            let v = y * width + x;
            let flip = rng.as_mut().map(|r| r.gen_bool(0.5)).unwrap_or(false);
            if flip {
                edges.push((v + 1, v + width));
            } else {
                edges.push((v, v + width + 1));
            }
        }
    }
    let g = Graph::from_edges(width * height, &edges).unwrap();
    embed_by_coordinates(g, &grid_coords(width, height))
}

/// Random spanning-or-not subgraph of a grid: every grid edge is kept with
/// probability `keep`. All vertices are retained.
pub fn grid_subgraph(width: usize, height: usize, keep: f64, rng: &mut Rng) -> Graph {
    let edges: Vec<_> = grid_edges(width, height)
        .into_iter()
        .filter(|_| rng.gen_bool(keep))
        .collect();
    let g = Graph::from_edges(width * height, &edges).unwrap();
    embed_by_coordinates(g, &grid_coords(width, height))
}

/// Path on `n` vertices drawn on a line.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    let g = Graph::from_edges(n, &edges).unwrap();
    let coords: Vec<_> = (0..n).map(|v| (v as f64, 0.0)).collect();
    embed_by_coordinates(g, &coords)
}

/// Cycle on `n >= 3` vertices drawn on a circle.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    let g = Graph::from_edges(n, &edges).unwrap();
    let coords: Vec<_> = (0..n)
        .map(|v| {
            let t = std::f64::consts::TAU * v as f64 / n as f64;
            (t.cos(), t.sin())
        })
        .collect();
    embed_by_coordinates(g, &coords)
}

/// Star `K_{1,leaves}` with the hub at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    let g = Graph::from_edges(leaves + 1, &edges).unwrap();
    let mut coords = vec![(0.0, 0.0)];
    coords.extend((0..leaves).map(|i| {
        let t = std::f64::consts::TAU * i as f64 / leaves.max(1) as f64;
        (t.cos(), t.sin())
    }));
    embed_by_coordinates(g, &coords)
}

/// Colors every vertex independently: color `c` with probability
/// `weights[c] / sum(weights)`.
pub fn random_coloring(g: Graph, weights: &[u32], rng: &mut Rng) -> Graph {
    let total: u32 = weights.iter().sum();
    let colors = (0..g.n())
        .map(|_| {
            let mut x = rng.gen_range(0..total);
            let mut c = 0;
            while x >= weights[c] {
                x -= weights[c];
                c += 1;
            }
            c
        })
        .collect();
    g.with_colors(colors, weights.len()).unwrap()
}

/// Colors a `width`-wide grid in vertical stripes of `stripe` columns,
/// cycling through `d` colors.
pub fn striped_coloring(g: Graph, width: usize, stripe: usize, d: usize) -> Graph {
    let colors = (0..g.n()).map(|v| ((v % width) / stripe) % d).collect();
    g.with_colors(colors, d).unwrap()
}

/// Checkerboard coloring of a `width`-wide grid.
pub fn checkerboard(g: Graph, width: usize) -> Graph {
    let colors = (0..g.n()).map(|v| (v % width + v / width) % 2).collect();
    g.with_colors(colors, 2).unwrap()
}

/// Random maximum coverage instance: each of `sets` sets contains each
/// element independently with probability `density` (and at least one).
pub fn random_coverage(universe: usize, sets: usize, k: usize, density: f64, rng: &mut Rng) -> CoverageInstance {
    let family: Vec<Vec<usize>> = (0..sets)
        .map(|_| {
            let mut s: Vec<usize> = (0..universe).filter(|_| rng.gen_bool(density)).collect();
            if s.is_empty() && universe > 0 {
                s.push(rng.gen_range(0..universe));
            }
            s
        })
        .collect();
    CoverageInstance::new(universe, family, k).expect("generated sets lie in the universe")
}

/// `count` distinct indices from `0..n` in increasing order.
pub fn sample_indices(n: usize, count: usize, rng: &mut Rng) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(count);
    all.sort_unstable();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_graph;
    use crate::rng::stream_rng;

    #[test]
    fn grid_counts_and_embedding() {
        let g = grid(4, 4);
        assert_eq!(g.n(), 16);
        assert_eq!(g.edge_count(), 24);
        assert!(validate_graph(&g).is_valid());
    }

    #[test]
    fn triangulated_grid_counts() {
        let g = triangulated_grid(4, 4, None);
        assert_eq!(g.edge_count(), 24 + 9);
        let r = validate_graph(&g);
        assert!(r.is_valid(), "{:?}", r.violations);
        let mut rng = stream_rng(3, 0);
        let g = triangulated_grid(10, 7, Some(&mut rng));
        assert_eq!(g.edge_count(), 9 * 7 + 10 * 6 + 9 * 6);
        assert!(validate_graph(&g).is_valid());
    }

    #[test]
    fn subgraphs_and_small_families_are_planar() {
        let mut rng = stream_rng(1, 0);
        for _ in 0..20 {
            assert!(validate_graph(&grid_subgraph(5, 4, 0.6, &mut rng)).is_valid());
        }
        assert!(validate_graph(&path(7)).is_valid());
        assert!(validate_graph(&cycle(7)).is_valid());
        assert!(validate_graph(&star(6)).is_valid());
    }

        #[test]
    fn coverage_generator_is_deterministic() {
        let a = random_coverage(20, 10, 3, 0.3, &mut stream_rng(7, 0));
        let b = random_coverage(20, 10, 3, 0.3, &mut stream_rng(7, 0));
        assert_eq!(a, b);
    }
}
