//! Lipton–Tarjan separator for embedded planar graphs.
//!
//! Breadth-first levels supply a cheap cut when the median level is small.
//! Otherwise two thin levels `l0 < l1 < l2` are removed and, when the slab
//! between them is still too heavy, the slab (with everything above `l0`
//! contracted to one root) is triangulated and a fundamental cycle of a
//! breadth-first tree is used to split it.

use std::collections::{HashMap, VecDeque};

use super::{assemble, two_thirds, FBound, Separation, SeparatorError, SeparatorOracle};
use crate::graph::{validate_graph, Graph, Violation};
use crate::Rational;

/// `2 * sqrt(2)`: separator size bound factor in front of `sqrt(n)`.
pub const LIPTON_TARJAN_CONSTANT: f64 = std::f64::consts::SQRT_2 * 2.0;

/// Planar separator oracle with `alpha = 2/3` and `f(n) = 2 sqrt(2) sqrt(n)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PlanarSeparator;

impl SeparatorOracle for PlanarSeparator {
    fn name(&self) -> &'static str {
        "lipton-tarjan"
    }

    fn alpha(&self) -> Rational {
        two_thirds()
    }

    fn bound(&self) -> FBound {
        FBound { c: LIPTON_TARJAN_CONSTANT, delta: 0.5, threshold: 2 }
    }

    fn separate_weighted(&self, g: &Graph, weights: &[u64]) -> Result<Separation, SeparatorError> {
        lipton_tarjan_weighted(g, weights)
    }
}

pub fn lipton_tarjan_separator(g: &Graph) -> Result<Separation, SeparatorError> {
    lipton_tarjan_weighted(g, &vec![1; g.n()])
}

/// Separator whose two sides each carry at most 2/3 of the total weight.
pub fn lipton_tarjan_weighted(g: &Graph, weights: &[u64]) -> Result<Separation, SeparatorError> {
    if weights.len() != g.n() {
        return Err(SeparatorError::WeightLength(weights.len(), g.n()));
    }
    if g.rotation().is_none() {
        return Err(SeparatorError::MissingEmbedding);
    }
    let report = validate_graph(g);
    if let Some(v) = report.violations.first() {
        let planar_issue = matches!(v, Violation::Euler { .. });
        return Err(if planar_issue {
            SeparatorError::NonPlanar(v.to_string())
        } else {
            SeparatorError::NonPlanar(format!("invalid embedding: {v}"))
        });
    }

    let n = g.n();
    let mut in_sep = vec![false; n];
    if n <= 2 {
        return Ok(assemble(g, &in_sep, weights, two_thirds()));
    }
    let total: u64 = weights.iter().sum();
    loop {
        let comps = g.components_avoiding(&in_sep);
        let heavy = comps
            .into_iter()
            .find(|c| 3 * c.iter().map(|&v| weights[v]).sum::<u64>() > 2 * total);
        let Some(comp) = heavy else { break };
        if comp.len() <= 2 {
            for v in comp {
                in_sep[v] = true;
            }
            continue;
        }
        let (sub, map) = g.induced_subgraph(&comp);
        let sub_weights: Vec<u64> = map.iter().map(|&v| weights[v]).collect();
        let local = connected_separator(&sub, &sub_weights);
        if local.is_empty() {
            // Cannot happen for a connected component of weight > 0; keep
            // the loop finite regardless.
            let heaviest = (0..sub.n()).max_by_key(|&v| (sub_weights[v], usize::MAX - v)).unwrap();
            in_sep[map[heaviest]] = true;
        }
        for v in local {
            in_sep[map[v]] = true;
        }
    }
    Ok(assemble(g, &in_sep, weights, two_thirds()))
}

struct Bfs {
    level: Vec<usize>,
    parent: Vec<usize>,
    levels: Vec<Vec<usize>>,
}

fn bfs(g: &Graph, root: usize) -> Bfs {
    let n = g.n();
    let mut level = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    level[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        if levels.len() <= level[u] {
            levels.push(Vec::new());
        }
        levels[level[u]].push(u);
        for &w in g.neighbors(u) {
            if level[w] == usize::MAX {
                level[w] = level[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Bfs { level, parent, levels }
}

/// Separator (local vertex ids) of a connected embedded graph with `n >= 3`
/// such that every component of `G - S` weighs at most 2/3 of the total.
fn connected_separator(g: &Graph, weights: &[u64]) -> Vec<usize> {
    let n = g.n();
    let total: u64 = weights.iter().sum();
    let bfs = bfs(g, 0);
    let h = bfs.levels.len() - 1;
    let level_weight: Vec<u64> = bfs
        .levels
        .iter()
        .map(|l| l.iter().map(|&v| weights[v]).sum())
        .collect();

    let mut acc = 0;
    let mut l1 = h;
    for (l, &w) in level_weight.iter().enumerate() {
        acc += w;
        if 2 * acc >= total {
            l1 = l;
            break;
        }
    }
    let bound = super::planar::LIPTON_TARJAN_CONSTANT * (n as f64).sqrt();
    if (bfs.levels[l1].len() as f64) <= bound {
        return bfs.levels[l1].clone();
    }

    let size = |l: isize| -> usize {
        if l < 0 || l as usize > h {
            0
        } else {
            bfs.levels[l as usize].len()
        }
    };
    let l1i = l1 as isize;
    let l0 = (-1..=l1i)
        .rev()
        .min_by_key(|&l| size(l) + 2 * (l1i - l) as usize)
        .unwrap();
    let l2 = (l1i + 1..=h as isize + 1)
        .min_by_key(|&l| size(l) + 2 * (l - l1i - 1) as usize)
        .unwrap();

    let mut separator: Vec<usize> = Vec::new();
    for l in [l0, l2] {
        if l >= 0 && (l as usize) <= h {
            separator.extend(&bfs.levels[l as usize]);
        }
    }
    let middle_weight: u64 = ((l0 + 1)..l2).map(|l| level_weight[l as usize]).sum();
    if 3 * middle_weight <= 2 * total {
        return separator;
    }
    separator.extend(slab_cycle(g, weights, &bfs, l0, l2 as usize));
    separator
}

/// Half-edge structure for an embedded multigraph. Darts `2e` and `2e + 1`
/// are the two orientations of edge `e`.
struct Plane {
    tail: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    first: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Plane {
    fn from_rotations(vertex_count: usize, tail: Vec<usize>, rotations: &[Vec<usize>]) -> Plane {
        let darts = tail.len();
        let mut next = vec![NONE; darts];
        let mut prev = vec![NONE; darts];
        let mut first = vec![NONE; vertex_count];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                continue;
            }
            first[v] = rot[0];
            for i in 0..rot.len() {
                let a = rot[i];
                let b = rot[(i + 1) % rot.len()];
                next[a] = b;
                prev[b] = a;
            }
        }
        Plane { tail, next, prev, first }
    }

    fn head(&self, d: usize) -> usize {
        self.tail[d ^ 1]
    }

    fn face_next(&self, d: usize) -> usize {
        self.next[d ^ 1]
    }

    fn vertex_count(&self) -> usize {
        self.first.len()
    }

    fn faces(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let mut face_of = vec![NONE; self.tail.len()];
        let mut faces = Vec::new();
        for start in 0..self.tail.len() {
            if face_of[start] != NONE {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut d = start;
            while face_of[d] == NONE {
                face_of[d] = id;
                face.push(d);
                d = self.face_next(d);
            }
            faces.push(face);
        }
        (face_of, faces)
    }

    fn add_vertex(&mut self) -> usize {
        self.first.push(NONE);
        self.first.len() - 1
    }

    /// Adds edge `u - z`, inserting dart `u -> z` right after `after` in the
    /// rotation at `u`, and dart `z -> u` after `z_after` at `z` (or as the
    /// only dart). Returns the dart `z -> u`.
    fn add_edge(&mut self, after: usize, z: usize, z_after: usize) -> usize {
        let u = self.tail[after];
        let d = self.tail.len();
        self.tail.push(u);
        self.tail.push(z);
        self.next.extend([NONE, NONE]);
        self.prev.extend([NONE, NONE]);
        let succ = self.next[after];
        self.next[after] = d;
        self.prev[d] = after;
        self.next[d] = succ;
        self.prev[succ] = d;
        let back = d + 1;
        if z_after == NONE {
            self.next[back] = back;
            self.prev[back] = back;
            self.first[z] = back;
        } else {
            let succ = self.next[z_after];
            self.next[z_after] = back;
            self.prev[back] = z_after;
            self.next[back] = succ;
            self.prev[succ] = back;
        }
        back
    }
}

/// Fundamental-cycle separator of the slab between levels `l0` and `l2`.
/// Returns the real vertices on the chosen cycle.
fn slab_cycle(g: &Graph, weights: &[u64], bfs: &Bfs, l0: isize, l2: usize) -> Vec<usize> {
    let rot = g.rotation().expect("checked by caller");
    let in_slab = |v: usize| (bfs.level[v] as isize) > l0 && bfs.level[v] < l2;
    let contracted = l0 >= 0;
    let is_inner = |v: usize| contracted && (bfs.level[v] as isize) <= l0;

    // Slab vertex ids; id 0 is the contracted root when `contracted`.
    let mut local = vec![NONE; g.n()];
    let mut global = Vec::new();
    if contracted {
        global.push(NONE);
    }
    for v in 0..g.n() {
        if in_slab(v) {
            local[v] = global.len();
            global.push(v);
        }
    }
    let root = if contracted { 0 } else { local[bfs.levels[0][0]] };

    let mut dart_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut tail = Vec::new();
    for (u, v) in g.edges() {
        let keep = (in_slab(u) && in_slab(v)) || (in_slab(u) && is_inner(v)) || (is_inner(u) && in_slab(v));
        if !keep {
            continue;
        }
        let lu = if is_inner(u) { 0 } else { local[u] };
        let lv = if is_inner(v) { 0 } else { local[v] };
        dart_of.insert((u, v), tail.len());
        tail.push(lu);
        dart_of.insert((v, u), tail.len());
        tail.push(lv);
    }

    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); global.len()];
    for (lv, &v) in global.iter().enumerate() {
        if v == NONE {
            continue;
        }
        rotations[lv] = rot[v]
            .iter()
            .filter_map(|&w| dart_of.get(&(v, w)).copied())
            .collect();
    }
    if contracted {
        rotations[0] = contracted_rotation(rot, bfs, l0 as usize, &dart_of);
    }

    let mut plane = Plane::from_rotations(global.len(), tail, &rotations);
    let real_count = plane.vertex_count();

    // Breadth-first tree over slab edges, rooted at the (contracted) root.
    let mut depth = vec![NONE; real_count];
    let mut parent_dart = vec![NONE; real_count];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let start = plane.first[u];
        if start == NONE {
            continue;
        }
        let mut d = start;
        loop {
            let w = plane.head(d);
            if depth[w] == NONE {
                depth[w] = depth[u] + 1;
                parent_dart[w] = d ^ 1;
                queue.push_back(w);
            }
            d = plane.next[d];
            if d == start {
                break;
            }
        }
    }

    // Star-triangulate every non-triangular face with a weightless dummy.
    let (_, faces) = plane.faces();
    for face in faces {
        if face.len() == 3 {
            continue;
        }
        let z = plane.add_vertex();
        let k = face.len();
        let mut z_last = NONE;
        for i in (0..k).rev() {
            let incoming = face[(i + k - 1) % k];
            z_last = plane.add_edge(incoming ^ 1, z, z_last);
        }
        let entry = plane.first[z];
        depth.push(depth[plane.head(entry)] + 1);
        parent_dart.push(entry);
    }
    let vertex_count = plane.vertex_count();
    let (face_of, faces) = plane.faces();
    debug_assert!(faces.iter().all(|f| f.len() == 3));
    debug_assert_eq!(
        vertex_count as i64 - (plane.tail.len() / 2) as i64 + faces.len() as i64,
        2
    );

    let weight_of = |v: usize| -> u64 {
        if v < global.len() && global[v] != NONE {
            weights[global[v]]
        } else {
            0
        }
    };
    let mut is_tree_edge = vec![false; plane.tail.len() / 2];
    for v in 0..vertex_count {
        if parent_dart[v] != NONE {
            is_tree_edge[parent_dart[v] / 2] = true;
        }
    }

    // Dual spanning tree over the non-tree edges.
    let face_count = faces.len();
    let mut dual_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); face_count];
    for e in 0..is_tree_edge.len() {
        if !is_tree_edge[e] {
            let (f1, f2) = (face_of[2 * e], face_of[2 * e + 1]);
            dual_adj[f1].push((f2, e));
            dual_adj[f2].push((f1, e));
        }
    }
    let mut charged = vec![0u64; face_count];
    let mut charged_face = vec![NONE; vertex_count];
    for v in 0..vertex_count {
        if plane.first[v] != NONE {
            charged_face[v] = face_of[plane.first[v]];
            charged[charged_face[v]] += weight_of(v);
        }
    }
    let mut tin = vec![NONE; face_count];
    let mut tout = vec![0usize; face_count];
    let mut child_of_edge = vec![NONE; is_tree_edge.len()];
    let mut subtree = charged.clone();
    let mut clock = 0;
    let mut stack = vec![(0usize, 0usize)];
    tin[0] = clock;
    clock += 1;
    let mut post = Vec::with_capacity(face_count);
    let mut dual_parent = vec![NONE; face_count];
    while let Some(&mut (f, ref mut i)) = stack.last_mut() {
        if *i < dual_adj[f].len() {
            let (h, e) = dual_adj[f][*i];
            *i += 1;
            if tin[h] == NONE {
                tin[h] = clock;
                clock += 1;
                child_of_edge[e] = h;
                dual_parent[h] = f;
                stack.push((h, 0));
            }
        } else {
            tout[f] = clock;
            post.push(f);
            stack.pop();
        }
    }
    for &f in &post {
        if dual_parent[f] != NONE {
            let s = subtree[f];
            subtree[dual_parent[f]] += s;
        }
    }
    let slab_total: u64 = (0..vertex_count).map(weight_of).sum();

    let cycle_of = |u: usize, v: usize| -> Vec<usize> {
        let (mut a, mut b) = (u, v);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while depth[a] > depth[b] {
            left.push(a);
            a = plane.head(parent_dart[a]);
        }
        while depth[b] > depth[a] {
            right.push(b);
            b = plane.head(parent_dart[b]);
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = plane.head(parent_dart[a]);
            b = plane.head(parent_dart[b]);
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    };

    let mut best: Option<(u64, usize)> = None;
    for e in 0..is_tree_edge.len() {
        if is_tree_edge[e] || child_of_edge[e] == NONE {
            continue;
        }
        let side = child_of_edge[e];
        let inside_faces = |f: usize| f != NONE && tin[f] >= tin[side] && tin[f] < tout[side];
        let cycle = cycle_of(plane.tail[2 * e], plane.tail[2 * e + 1]);
        let mut on_cycle = 0u64;
        let mut charged_inside_on_cycle = 0u64;
        for &v in &cycle {
            let w = weight_of(v);
            on_cycle += w;
            if inside_faces(charged_face[v]) {
                charged_inside_on_cycle += w;
            }
        }
        let inside = subtree[side] - charged_inside_on_cycle;
        let outside = slab_total - inside - on_cycle;
        let score = inside.max(outside);
        if best.map_or(true, |(s, _)| score < s) {
            best = Some((score, e));
        }
    }
    let Some((_, e)) = best else { return Vec::new() };
    cycle_of(plane.tail[2 * e], plane.tail[2 * e + 1])
        .into_iter()
        .filter(|&v| v < global.len() && global[v] != NONE)
        .map(|v| global[v])
        .collect()
}

/// Cyclic order of the slab edges leaving the contracted set of levels
/// `<= l0`, found by walking around its breadth-first tree.
fn contracted_rotation(
    rot: &[Vec<usize>],
    bfs: &Bfs,
    l0: usize,
    dart_of: &HashMap<(usize, usize), usize>,
) -> Vec<usize> {
    let root = bfs.levels[0][0];
    let mut out = Vec::new();
    // (vertex, index into its rotation to examine next, steps remaining)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, 0, rot[root].len())];
    while let Some(top) = stack.last_mut() {
        let (u, idx, remaining) = *top;
        if remaining == 0 {
            stack.pop();
            continue;
        }
        top.1 = (idx + 1) % rot[u].len();
        top.2 -= 1;
        let x = rot[u][idx];
        if bfs.level[x] <= l0 && bfs.parent[x] == u && x != root {
            let back = rot[x].iter().position(|&w| w == u).unwrap();
            let deg = rot[x].len();
            stack.push((x, (back + 1) % deg, deg - 1));
        } else if bfs.level[x] == l0 + 1 {
            out.push(dart_of[&(u, x)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, path, triangulated_grid};
    use crate::separator::verify_separation;

    #[test]
    fn path_is_cut_in_the_middle() {
        let g = path(100);
        let sep = lipton_tarjan_separator(&g).unwrap();
        assert!(verify_separation(&g, &sep).is_empty());
        assert_eq!(sep.separator.len(), 1);
        assert!(sep.side_a.len() <= 66 && sep.side_b.len() <= 66);
    }

    #[test]
    fn grid_separator_is_small() {
        let g = grid(32, 32);
        let sep = lipton_tarjan_separator(&g).unwrap();
        assert!(verify_separation(&g, &sep).is_empty());
        assert!((sep.separator.len() as f64) <= LIPTON_TARJAN_CONSTANT * 32.0);
        let cap = (2 * 1024 + 2) / 3;
        assert!(sep.side_a.len() <= cap && sep.side_b.len() <= cap);
    }

    #[test]
    fn missing_embedding_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(lipton_tarjan_separator(&g), Err(SeparatorError::MissingEmbedding));
    }

    #[test]
    fn nonplanar_rotation_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap()
            .with_rotation(vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]])
            .unwrap();
        assert!(matches!(lipton_tarjan_separator(&g), Err(SeparatorError::NonPlanar(_))));
    }

    /// Wheel-like graphs have one huge BFS level, which forces the slab and
    /// cycle phase.
    fn wheel(spokes: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..=spokes).map(|v| (0, v)).collect();
        for v in 1..=spokes {
            edges.push((v, if v == spokes { 1 } else { v + 1 }));
        }
        let g = Graph::from_edges(spokes + 1, &edges).unwrap();
        let mut coords = vec![(0.0, 0.0)];
        coords.extend((0..spokes).map(|i| {
            let t = std::f64::consts::TAU * i as f64 / spokes as f64;
            (t.cos(), t.sin())
        }));
        crate::generators::embed_by_coordinates(g, &coords)
    }

    #[test]
    fn wheel_uses_cycle_phase() {
        for spokes in [12, 40, 200] {
            let g = wheel(spokes);
            let sep = lipton_tarjan_separator(&g).unwrap();
            assert!(verify_separation(&g, &sep).is_empty(), "spokes={spokes}");
            assert!((sep.separator.len() as f64) <= LIPTON_TARJAN_CONSTANT * (g.n() as f64).sqrt());
        }
    }

    #[test]
    fn slab_phase_on_nested_cycles() {
        // concentric squares joined radially: wide BFS levels far from the root
        let rings = 12;
        let per = 40;
        let mut edges = Vec::new();
        let mut coords = Vec::new();
        for r in 0..rings {
            for i in 0..per {
                let v = r * per + i;
                let t = std::f64::consts::TAU * i as f64 / per as f64;
                coords.push(((r + 1) as f64 * t.cos(), (r + 1) as f64 * t.sin()));
                edges.push((v, r * per + (i + 1) % per));
                if r + 1 < rings {
                    edges.push((v, v + per));
                }
            }
        }
        let g = Graph::from_edges(rings * per, &edges).unwrap();
        let g = crate::generators::embed_by_coordinates(g, &coords);
        let sep = lipton_tarjan_separator(&g).unwrap();
        assert!(verify_separation(&g, &sep).is_empty());
        assert!((sep.separator.len() as f64) <= LIPTON_TARJAN_CONSTANT * (g.n() as f64).sqrt());
    }

    #[test]
    fn weighted_balances_weight() {
        let g = triangulated_grid(20, 20, None);
        let mut w = vec![0u64; g.n()];
        for v in 0..20 {
            w[v] = 5; // all weight on the first row
        }
        let sep = lipton_tarjan_weighted(&g, &w).unwrap();
        assert!(crate::separator::verify_weighted_separation(&g, &sep, &w).is_empty());
    }
}
