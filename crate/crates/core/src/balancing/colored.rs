//! Color-balanced divisions: the parts of a uniform division are regrouped
//! so that every merged part reproduces the global color proportions.

use num_traits::{Signed, Zero};

use super::{partition_two_vectors, vector_partition_steinitz, BalanceError, BalancedPartition, TwoVectorSet};
use crate::division::{uniform_division, verify_division, Division, DivisionReport, SizeRule};
use crate::graph::Graph;
use crate::separator::SeparatorOracle;
use crate::Rational;

/// `counts[i][c]` = number of vertices of color `c` in `parts[i]`.
pub fn color_counts(g: &Graph, parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let d = g.color_count().max(1);
    let colors = g.colors();
    parts
        .iter()
        .map(|p| {
            let mut c = vec![0; d];
            for &v in p {
                c[colors.map_or(0, |cs| cs[v])] += 1;
            }
            c
        })
        .collect()
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new((num as i64).into(), (den as i64).into())
}

fn int(x: usize) -> Rational {
    Rational::from_integer((x as i64).into())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoColorDivision {
    /// The merged parts.
    pub division: Division,
    /// The uniform division whose parts were merged.
    pub base: Division,
    pub partition: BalancedPartition<Rational>,
    /// Color index of the smaller class `Γ1`.
    pub gamma1: usize,
    /// `|Γ1 ∩ parts| / |Γ2 ∩ parts|`.
    pub alpha: Rational,
    pub q_prime: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DColorDivision {
    pub division: Division,
    pub base: Division,
    pub partition: BalancedPartition<Rational>,
    pub k: usize,
}

/// Outcome of a color-balance check.
///
/// Deviations are measured twice: against the color totals inside the parts
/// (the reference the regrouping balances against, and the one that is
/// gated) and against the whole color classes, boundary vertices included.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorReport {
    pub division: DivisionReport,
    pub bound: Rational,
    pub max_deviation: Rational,
    pub max_deviation_global: Rational,
    pub violations: Vec<String>,
}

impl ColorReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn global_within_bound(&self) -> bool {
        self.max_deviation_global <= self.bound
    }
}

/// One chunk holding the single part of a small graph's division.
fn trivial_partition(dim: usize) -> BalancedPartition<Rational> {
    BalancedPartition {
        permutation: vec![0],
        chunks: vec![vec![0]],
        q_prime: None,
        certificates: vec![vec![Rational::zero(); dim]],
    }
}

fn two_colors(g: &Graph) -> Result<&[usize], BalanceError> {
    match g.colors() {
        Some(c) if g.color_count() <= 2 => Ok(c),
        Some(_) => Err(BalanceError::InvalidParameter(format!("expected 2 colors, got {}", g.color_count()))),
        None => Err(BalanceError::InvalidParameter("graph has no colors".into())),
    }
}

/// Smaller color class within `parts` (ties: color 0) and the class totals.
fn pick_gamma1(counts: &[Vec<usize>]) -> (usize, usize, usize) {
    let total = |c: usize| counts.iter().map(|v| v.get(c).copied().unwrap_or(0)).sum::<usize>();
    let (t0, t1) = (total(0), total(1));
    if t1 < t0 {
        (1, t1, t0)
    } else {
        (0, t0, t1)
    }
}

/// Two-color balanced division at parameters `r` and `q`.
///
/// Each part `V_i` of a uniform division becomes the vector
/// `(|V_i ∩ Γ1|, |V_i ∩ Γ2|) / (2r)`, whose coordinates sum to a value in
/// `[1/4, 1]`; the vectors are balanced with `alpha = sum a / sum b` and cut
/// into chunks of `q'` or `q' + 1` parts, and every chunk is merged.
pub fn two_color_division(
    g: &Graph,
    oracle: &dyn SeparatorOracle,
    r: usize,
    q: usize,
) -> Result<TwoColorDivision, BalanceError> {
    two_colors(g)?;
    let base = uniform_division(g, oracle, r)?;
    let counts = color_counts(g, &base.parts);
    let (gamma1, size1, size2) = pick_gamma1(&counts);
    if size2 == 0 {
        return Err(BalanceError::EmptyColorClass(1 - gamma1));
    }
    if g.n() < 8 {
        // the uniform division is the single part V; nothing to regroup
        let partition = trivial_partition(1);
        let alpha = ratio(size1, size2);
        return Ok(TwoColorDivision { division: base.clone(), base, partition, gamma1, alpha, q_prime: 1 });
    }
    let l = base.parts.len();
    if l < q {
        return Err(BalanceError::InvalidParameter(format!(
            "the uniform division has {l} parts, fewer than q = {q}; lower q or r"
        )));
    }
    let pairs = counts
        .iter()
        .map(|c| (ratio(c[gamma1], 2 * r), ratio(c.get(1 - gamma1).copied().unwrap_or(0), 2 * r)))
        .collect();
    let set = TwoVectorSet::with_ratio_alpha(pairs, ratio(1, 4), int(1))?;
    let partition = partition_two_vectors(&set, q)?;
    let division = base.merge(g, &partition.chunks, r);
    let q_prime = partition.q_prime.expect("two-vector chunkings record q'");
    Ok(TwoColorDivision { division, base, partition, gamma1, alpha: set.alpha, q_prime })
}

/// Recomputes the four properties of a two-color division from `g`:
/// part disjointness, `|V_i|` in `[ceil(q' r / 2), 2 (q' + 1) r]`, measured
/// boundary constants, and `| |V_i ∩ Γ1| - alpha |V_i ∩ Γ2| | <= 2r`.
pub fn verify_two_color(g: &Graph, d: &Division, q_prime: usize) -> ColorReport {
    let r = d.r;
    let rule = SizeRule::Range { min: (q_prime * r).div_ceil(2), max: 2 * (q_prime + 1) * r };
    let division = verify_division(g, d, rule);
    let mut violations = division.violations.clone();
    let bound = int(2 * r);
    if g.colors().is_none() || g.color_count() > 2 {
        violations.push("graph is not 2-colored".into());
        return ColorReport { division, max_deviation: bound.clone(), max_deviation_global: bound.clone(), bound, violations };
    }
    let counts = color_counts(g, &d.parts);
    let (gamma1, p1, p2) = pick_gamma1(&counts);
    let all = color_counts(g, &[(0..g.n()).collect()]);
    let (g1, g2) = (all[0][gamma1], all[0].get(1 - gamma1).copied().unwrap_or(0));
    let alpha = if p2 > 0 { ratio(p1, p2) } else { Rational::zero() };
    let alpha_global = if g2 > 0 { ratio(g1, g2) } else { Rational::zero() };
    let mut max_deviation = Rational::zero();
    let mut max_deviation_global = Rational::zero();
    for (i, c) in counts.iter().enumerate() {
        let (a, b) = (int(c[gamma1]), int(c.get(1 - gamma1).copied().unwrap_or(0)));
        let dev = (a.clone() - alpha.clone() * b.clone()).abs();
        let dev_global = (a - alpha_global.clone() * b).abs();
        if dev > bound {
            violations.push(format!("part {i}: color discrepancy {dev} > 2r = {bound}"));
        }
        max_deviation = max_deviation.max(dev);
        max_deviation_global = max_deviation_global.max(dev_global);
    }
    ColorReport { division, bound, max_deviation, max_deviation_global, violations }
}

/// `d`-color balanced division at parameter `r`: the uniform division's
/// parts become their color-count vectors scaled by `1 / (2r)` and are cut
/// into `k = ceil(l / r)` chunks along a Steinitz order.
pub fn d_color_division(g: &Graph, oracle: &dyn SeparatorOracle, r: usize) -> Result<DColorDivision, BalanceError> {
    if g.colors().is_none() {
        return Err(BalanceError::InvalidParameter("graph has no colors".into()));
    }
    let base = uniform_division(g, oracle, r)?;
    let l = base.parts.len();
    if l == 0 {
        return Err(BalanceError::InvalidParameter("the uniform division has no parts".into()));
    }
    if g.n() < 8 {
        let partition = trivial_partition(g.color_count().max(1));
        return Ok(DColorDivision { division: base.clone(), base, partition, k: 1 });
    }
    let k = l.div_ceil(r);
    let vectors: Vec<Vec<Rational>> = color_counts(g, &base.parts)
        .iter()
        .map(|c| c.iter().map(|&x| ratio(x, 2 * r)).collect())
        .collect();
    let partition = vector_partition_steinitz(&vectors, k)?;
    let division = base.merge(g, &partition.chunks, r);
    Ok(DColorDivision { division, base, partition, k })
}

/// Recomputes part disjointness and boundary constants, and checks
/// `| |V_i ∩ Z_q| - P_q / t | <= 4 r d` for every color `q`, where `P_q`
/// counts color `q` inside the parts.
pub fn verify_d_color(g: &Graph, d: &Division) -> ColorReport {
    let r = d.r;
    let division = verify_division(g, d, SizeRule::Any);
    let mut violations = division.violations.clone();
    let colors = g.color_count().max(1);
    let bound = int(4 * r * colors);
    let t = d.parts.len();
    if t == 0 {
        return ColorReport { division, max_deviation: Rational::zero(), max_deviation_global: Rational::zero(), bound, violations };
    }
    let counts = color_counts(g, &d.parts);
    let all = color_counts(g, &[(0..g.n()).collect()]);
    let mut max_deviation = Rational::zero();
    let mut max_deviation_global = Rational::zero();
    for q in 0..colors {
        let inside: usize = counts.iter().map(|c| c[q]).sum();
        let mean = ratio(inside, t);
        let mean_global = ratio(all[0][q], t);
        for (i, c) in counts.iter().enumerate() {
            let dev = (int(c[q]) - mean.clone()).abs();
            if dev > bound {
                violations.push(format!("part {i}, color {q}: deviation {dev} > 4rd = {bound}"));
            }
            max_deviation = max_deviation.max(dev);
            max_deviation_global = max_deviation_global.max((int(c[q]) - mean_global.clone()).abs());
        }
    }
    ColorReport { division, bound, max_deviation, max_deviation_global, violations }
}
