use std::collections::HashSet;

use super::embedding::face_count_by_component;
use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { u: usize, v: usize },
    SelfLoop { v: usize },
    Duplicate { u: usize, v: usize },
    /// `v` appears in the list of `u` but not the other way round.
    Asymmetric { u: usize, v: usize },
    RotationLength { expected: usize, found: usize },
    /// The rotation at `v` is not a permutation of its adjacency list.
    RotationMismatch { v: usize },
    /// Euler's formula fails for the component containing `root`.
    Euler { root: usize, vertices: usize, edges: usize, faces: usize },
    ColorLength { expected: usize, found: usize },
    ColorOutOfRange { v: usize, color: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::OutOfRange { u, v } => write!(f, "edge ({u}, {v}) out of range"),
            Violation::SelfLoop { v } => write!(f, "self-loop at {v}"),
            Violation::Duplicate { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Violation::Asymmetric { u, v } => write!(f, "asymmetric adjacency ({u}, {v})"),
            Violation::RotationLength { expected, found } => {
                write!(f, "rotation has {found} entries, expected {expected}")
            }
            Violation::RotationMismatch { v } => write!(f, "rotation at {v} does not match adjacency"),
            Violation::Euler { root, vertices, edges, faces } => write!(
                f,
                "euler check failed in component of {root}: {vertices} - {edges} + {faces} != 2"
            ),
            Violation::ColorLength { expected, found } => {
                write!(f, "color list has {found} entries, expected {expected}")
            }
            Violation::ColorOutOfRange { v, color } => write!(f, "vertex {v} has color {color} out of range"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub components: usize,
    pub connected: bool,
    /// Total faces over all components, when a consistent rotation is present.
    pub faces: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks symmetry, loops, duplicates, rotation consistency, the Euler
/// formula of every component (when embedded) and color ranges.
pub fn validate_graph(g: &Graph) -> ValidationReport {
    let n = g.n();
    let mut violations = Vec::new();
    let adj = g.adjacency();
    let mut structural_ok = true;
    for (u, list) in adj.iter().enumerate() {
        let mut seen = HashSet::with_capacity(list.len());
        for &v in list {
            if v >= n {
                violations.push(Violation::OutOfRange { u, v });
                structural_ok = false;
                continue;
            }
            if v == u {
                violations.push(Violation::SelfLoop { v });
                structural_ok = false;
            }
            if !seen.insert(v) {
                violations.push(Violation::Duplicate { u, v });
                structural_ok = false;
            }
            if !adj[v].contains(&u) {
                violations.push(Violation::Asymmetric { u, v });
                structural_ok = false;
            }
        }
    }

    let components = if structural_ok { g.components() } else { Vec::new() };
    let mut faces = None;
    if let Some(rot) = g.rotation() {
        let mut rot_ok = structural_ok;
        if rot.len() != n {
            violations.push(Violation::RotationLength { expected: n, found: rot.len() });
            rot_ok = false;
        } else {
            for v in 0..n {
                let mut a = rot[v].clone();
                a.sort_unstable();
                let mut b = adj[v].clone();
                b.sort_unstable();
                if a != b {
                    violations.push(Violation::RotationMismatch { v });
                    rot_ok = false;
                }
            }
        }
        if rot_ok {
            if let Some(per_comp) = face_count_by_component(rot, &components) {
                let mut total = 0;
                for (comp, &(vertices, edges, f)) in components.iter().zip(&per_comp) {
                    total += f;
                    if vertices as i64 - edges as i64 + f as i64 != 2 {
                        violations.push(Violation::Euler { root: comp[0], vertices, edges, faces: f });
                    }
                }
                faces = Some(total);
            }
        }
    }

    if let Some(colors) = g.colors() {
        if colors.len() != n {
            violations.push(Violation::ColorLength { expected: n, found: colors.len() });
        } else {
            for (v, &c) in colors.iter().enumerate() {
                if c >= g.color_count() {
                    violations.push(Violation::ColorOutOfRange { v, color: c });
                }
            }
        }
    }

    ValidationReport {
        violations,
        components: components.len(),
        connected: components.len() <= 1,
        faces,
    }
}
