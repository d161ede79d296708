//! Face tracing on rotation systems.

use std::collections::HashMap;

/// Face orbits of a rotation system, as lists of darts `(tail, head)`.
///
/// The successor of dart `u -> v` is `v -> w` where `w` follows `u` in the
/// rotation at `v`. Requires a symmetric rotation (every `v` in `rot[u]` has
/// `u` in `rot[v]`); returns `None` otherwise.
pub(crate) fn trace_faces(rotation: &[Vec<usize>]) -> Option<Vec<Vec<(usize, usize)>>> {
    let n = rotation.len();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + rotation[v].len();
    }
    let mut position: Vec<HashMap<usize, usize>> = Vec::with_capacity(n);
    for order in rotation {
        let mut m = HashMap::with_capacity(order.len());
        for (i, &w) in order.iter().enumerate() {
            if w >= n {
                return None;
            }
            m.insert(w, i);
        }
        position.push(m);
    }
    let total = offset[n];
    let mut visited = vec![false; total];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rotation[u].len() {
            let start = offset[u] + i;
            if visited[start] {
                continue;
            }
            let mut face = Vec::new();
            let (mut tail, mut idx) = (u, i);
            loop {
                let dart = offset[tail] + idx;
                if visited[dart] {
                    break;
                }
                visited[dart] = true;
                let head = rotation[tail][idx];
                face.push((tail, head));
                let back = *position[head].get(&tail)?;
                idx = (back + 1) % rotation[head].len();
                tail = head;
            }
            faces.push(face);
        }
    }
    Some(faces)
}

/// Total number of faces traced by the rotation system (isolated vertices
/// contribute none).
pub fn count_faces(rotation: &[Vec<usize>]) -> Option<usize> {
    trace_faces(rotation).map(|f| f.len())
}

/// For each connected component (given as vertex lists), the triple
/// `(vertices, edges, faces)` where an isolated vertex counts one face.
pub fn face_count_by_component(
    rotation: &[Vec<usize>],
    components: &[Vec<usize>],
) -> Option<Vec<(usize, usize, usize)>> {
    let faces = trace_faces(rotation)?;
    let mut comp_of = vec![usize::MAX; rotation.len()];
    for (c, comp) in components.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let mut face_counts = vec![0usize; components.len()];
    for face in &faces {
        let c = comp_of[face[0].0];
        if c != usize::MAX {
            face_counts[c] += 1;
        }
    }
    Some(
        components
            .iter()
            .enumerate()
            .map(|(c, comp)| {
                let edges: usize = comp.iter().map(|&v| rotation[v].len()).sum::<usize>() / 2;
                let f = if comp.len() == 1 && edges == 0 { 1 } else { face_counts[c] };
                (comp.len(), edges, f)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_two_faces() {
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        assert_eq!(count_faces(&rot), Some(2));
    }

    #[test]
    fn tree_has_one_face() {
        let rot = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
        assert_eq!(count_faces(&rot), Some(1));
    }

    #[test]
    fn k4_planar_embedding() {
        // outer triangle 0,1,2 counter-clockwise, 3 in the middle
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        assert_eq!(count_faces(&rot), Some(4));
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let rot = vec![vec![1], vec![]];
        assert_eq!(count_faces(&rot), None);
    }
}
