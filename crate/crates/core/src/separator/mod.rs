//! Balanced vertex separators.
//!
//! A [`Separation`] splits the vertex set into a separator `S` and two sides
//! with no edge between them; each side holds at most an `alpha` fraction of
//! the vertices (or of the vertex weight, for the weighted entry points).

mod exhaustive;
mod planar;

pub use exhaustive::{exhaustive_separator, ExhaustiveSeparator};
pub use planar::{lipton_tarjan_separator, lipton_tarjan_weighted, PlanarSeparator, LIPTON_TARJAN_CONSTANT};

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::graph::Graph;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("graph has no rotation system")]
    MissingEmbedding,
    #[error("rotation system is not planar: {0}")]
    NonPlanar(String),
    #[error("exhaustive search supports at most {limit} vertices, got {n}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("weight vector has {0} entries, expected {1}")]
    WeightLength(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub separator: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub alpha: Rational,
}

/// `f(n) = c * n^(1 - delta)`; the separator size bound an oracle promises
/// for `n > threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FBound {
    pub c: f64,
    pub delta: f64,
    pub threshold: usize,
}

impl FBound {
    pub fn eval(&self, n: f64) -> f64 {
        if n <= 0.0 {
            0.0
        } else {
            self.c * n.powf(1.0 - self.delta)
        }
    }
}

/// A procedure producing `alpha`-balanced separators of size at most `f(n)`
/// for some graph class.
pub trait SeparatorOracle: Send + Sync {
    fn name(&self) -> &'static str;

    fn alpha(&self) -> Rational;

    fn bound(&self) -> FBound;

    fn separate(&self, g: &Graph) -> Result<Separation, SeparatorError> {
        self.separate_weighted(g, &vec![1; g.n()])
    }

    /// Separator whose sides each carry at most `alpha` of the total weight.
    fn separate_weighted(&self, g: &Graph, weights: &[u64]) -> Result<Separation, SeparatorError>;
}

pub(crate) fn two_thirds() -> Rational {
    Rational::new(2.into(), 3.into())
}

/// Splits `pieces` (vertex sets with weights, each of weight at most
/// `2/3` of the total) into two sides each of weight at most `2/3` of the
/// total. Returns `true` for pieces assigned to side A.
pub(crate) fn group_pieces(weights: &[u64]) -> Vec<bool> {
    let total: u64 = weights.iter().sum();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    let mut side = vec![false; weights.len()];
    let Some(&first) = order.first() else { return side };
    if 3 * weights[first] >= total {
        side[first] = true;
        return side;
    }
    let mut acc = 0;
    for &p in &order {
        if 3 * acc >= total {
            break;
        }
        side[p] = true;
        acc += weights[p];
    }
    side
}

/// Assembles a [`Separation`] from a separator membership mask: the
/// components of `G - S` are grouped into two sides by weight.
pub(crate) fn assemble(g: &Graph, in_separator: &[bool], weights: &[u64], alpha: Rational) -> Separation {
    let comps = g.components_avoiding(in_separator);
    let comp_weights: Vec<u64> = comps
        .iter()
        .map(|c| c.iter().map(|&v| weights[v]).sum())
        .collect();
    let sides = group_pieces(&comp_weights);
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for (comp, a) in comps.into_iter().zip(sides) {
        if a {
            side_a.extend(comp);
        } else {
            side_b.extend(comp);
        }
    }
    side_a.sort_unstable();
    side_b.sort_unstable();
    let separator = (0..g.n()).filter(|&v| in_separator[v]).collect();
    Separation { separator, side_a, side_b, alpha }
}

/// Independent check of the separation invariants: the three sets partition
/// `V`, no edge joins the sides, and each side has at most `alpha * n`
/// vertices. The balance condition is waived for `n <= 2`.
pub fn verify_separation(g: &Graph, sep: &Separation) -> Vec<String> {
    verify_weighted_separation(g, sep, &vec![1; g.n()])
}

pub fn verify_weighted_separation(g: &Graph, sep: &Separation, weights: &[u64]) -> Vec<String> {
    let n = g.n();
    let mut problems = Vec::new();
    let mut label = vec![0u8; n];
    for (tag, set) in [(1u8, &sep.separator), (2, &sep.side_a), (3, &sep.side_b)] {
        for &v in set {
            if v >= n {
                problems.push(format!("vertex {v} out of range"));
            } else if label[v] != 0 {
                problems.push(format!("vertex {v} appears twice"));
            } else {
                label[v] = tag;
            }
        }
    }
    if let Some(v) = label.iter().position(|&l| l == 0) {
        problems.push(format!("vertex {v} not covered"));
    }
    for (u, v) in g.edges() {
        if (label[u] == 2 && label[v] == 3) || (label[u] == 3 && label[v] == 2) {
            problems.push(format!("edge ({u}, {v}) joins the two sides"));
        }
    }
    if n > 2 {
        let total: u64 = weights.iter().sum();
        let bound = sep.alpha.clone() * Rational::from_integer(total.into());
        for (name, side) in [("A", &sep.side_a), ("B", &sep.side_b)] {
            let w: u64 = side.iter().filter(|&&v| v < n).map(|&v| weights[v]).sum();
            if Rational::from_integer(w.into()) > bound {
                problems.push(format!(
                    "side {name} has weight {w} > alpha * {total} = {:.3}",
                    bound.to_f64().unwrap_or(f64::NAN)
                ));
            }
        }
    }
    problems
}
