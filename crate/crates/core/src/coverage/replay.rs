//! Replays the local-search analysis on a concrete pair of solutions: the
//! exchange graph is divided into color-balanced parts and every quantity
//! the argument uses is computed and checked.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use super::{check_exchange_property, CoverageError, CoverageInstance, ExchangeGraph, ExchangeProvider, Side, Solution};
use crate::balancing::{two_color_division, TwoColorDivision};
use crate::separator::SeparatorOracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayConfig {
    pub b: usize,
    /// Division parameter; defaults to `b`.
    pub r: Option<usize>,
    /// Chunk parameter; defaults to `b`.
    pub q: Option<usize>,
}

impl ReplayConfig {
    pub fn new(b: usize) -> Self {
        ReplayConfig { b, r: None, q: None }
    }
}

/// Candidate swap `i`: remove `A_i`, add the first `|A_i|` sets of the
/// greedy order over `Ō_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSwap {
    pub part: usize,
    pub out: Vec<usize>,
    pub into: Vec<usize>,
    /// Coverage change on the original instance.
    pub gain: i64,
    /// `|out| <= b`.
    pub within_b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartReplay {
    /// `A_i`, family indices.
    pub a_sets: Vec<usize>,
    /// `O_i`.
    pub o_sets: Vec<usize>,
    /// `N(V_i) ∩ X ∩ O`, including sets attached by augmentation.
    pub o_boundary: Vec<usize>,
    /// `Ō_i = O_i ∪ N_i^O`.
    pub o_bar: Vec<usize>,
    /// `|L_i|`.
    pub lost: usize,
    /// `|W_i|`.
    pub won: usize,
    /// `S_1, S_2, ...` over `Ō_i`.
    pub greedy_order: Vec<usize>,
    /// `|S_j \ (Z_i ∪ S_1 ∪ ... ∪ S_{j-1})|`.
    pub marginal_gains: Vec<usize>,
    /// `|(S_1 ∪ ... ∪ S_j) \ Z_i|`.
    pub prefix_cover: Vec<usize>,
    pub gains_non_increasing: bool,
    /// `|prefix_j| * |Ō_i| >= j * |W_i|` for every `j`.
    pub prefix_bound_holds: bool,
    pub candidate: Option<CandidateSwap>,
}

#[derive(Debug, Clone)]
pub struct AnalysisReplay {
    /// `A ∩ O`, removed before the analysis together with the elements they cover.
    pub shared: Vec<usize>,
    pub reduced_a: Vec<usize>,
    pub reduced_o: Vec<usize>,
    pub exchange: ExchangeGraph,
    /// Elements covered by both sides that no exchange edge witnesses.
    pub exchange_violations: Vec<usize>,
    /// `None` when the reduced solutions are both empty.
    pub division: Option<TwoColorDivision>,
    /// Added `(O set, A-side node set)` pairs, family indices.
    pub augmented: Vec<(usize, usize)>,
    pub capacity: usize,
    /// Augmentations that exceeded every part's capacity.
    pub overflow: usize,
    pub parts: Vec<PartReplay>,
    pub alg: usize,
    pub opt: usize,
    /// `|Z|`, where `Z` also holds the elements of boundary sets of `A`.
    pub z: usize,
    /// `|Z|` with only elements shared between some `A_i` and `A \ A_i`.
    pub z_parts_only: usize,
    pub lost_total: usize,
    pub won_total: usize,
    /// `sum |L_i| <= alg - |Z|`.
    pub lost_claim: bool,
    /// `sum |W_i| >= opt - |Z|`.
    pub won_claim: bool,
    /// The two claims with the narrower `Z`.
    pub lost_claim_parts_only: bool,
    pub won_claim_parts_only: bool,
    pub prefix_bounds_hold: bool,
    pub gains_non_increasing: bool,
    pub c1: f64,
    pub c2: f64,
    /// `1 - 28 c1 c2 f(b) / b`.
    pub threshold: f64,
    /// `min |L_i| / |W_i|` over parts with `|W_i| > 0`.
    pub min_ratio: Option<f64>,
    /// Most profitable candidate swap, ties to the lowest part.
    pub best_swap: Option<CandidateSwap>,
}

impl AnalysisReplay {
    pub fn claims_hold(&self) -> bool {
        self.lost_claim && self.won_claim && self.prefix_bounds_hold && self.gains_non_increasing
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "shared {} reduced_a {} reduced_o {}", self.shared.len(), self.reduced_a.len(), self.reduced_o.len());
        let _ = writeln!(out, "exchange_edges {} exchange_violations {}", self.exchange.edges.len(), self.exchange_violations.len());
        let _ = writeln!(out, "parts {} augmented {} capacity {} overflow {}", self.parts.len(), self.augmented.len(), self.capacity, self.overflow);
        let _ = writeln!(out, "alg {} opt {} Z {} Z_parts_only {}", self.alg, self.opt, self.z, self.z_parts_only);
        let _ = writeln!(
            out,
            "sum_L {} <= alg-Z {} : {}",
            self.lost_total,
            self.alg as i64 - self.z as i64,
            self.lost_claim
        );
        let _ = writeln!(out, "sum_W {} >= opt-Z {} : {}", self.won_total, self.opt as i64 - self.z as i64, self.won_claim);
        let _ = writeln!(out, "claims_with_Z_parts_only {} {}", self.lost_claim_parts_only, self.won_claim_parts_only);
        let _ = writeln!(out, "prefix_bounds {} gains_non_increasing {}", self.prefix_bounds_hold, self.gains_non_increasing);
        let ratio = self.min_ratio.map_or("-".to_string(), |r| format!("{r:.4}"));
        let _ = writeln!(
            out,
            "swap_threshold min_L_over_W {ratio} threshold {:.4} (c1 {:.3} c2 {:.3})",
            self.threshold, self.c1, self.c2
        );
        let _ = writeln!(out, "part |A_i| |O_i| |N_i^O| |O_bar_i| |L_i| |W_i| swap_gain");
        for (i, p) in self.parts.iter().enumerate() {
            let gain = p.candidate.as_ref().map_or("-".to_string(), |c| c.gain.to_string());
            let _ = writeln!(
                out,
                "{i} {} {} {} {} {} {} {gain}",
                p.a_sets.len(),
                p.o_sets.len(),
                p.o_boundary.len(),
                p.o_bar.len(),
                p.lost,
                p.won
            );
        }
        match &self.best_swap {
            Some(s) => {
                let _ = writeln!(
                    out,
                    "profitable_swap part {} out {:?} into {:?} gain {} within_b {}",
                    s.part, s.out, s.into, s.gain, s.within_b
                );
            }
            None => {
                let _ = writeln!(out, "profitable_swap none");
            }
        }
        out
    }
}

fn union_minus(inst: &CoverageInstance, sets: &[usize], removed: &FixedBitSet) -> FixedBitSet {
    let mut u = inst.union_of(sets);
    u.difference_with(removed);
    u
}

/// Runs the replay for the pair `(a, o)`.
///
/// Sets in `a ∩ o` and the elements they cover are removed first. The
/// exchange graph of the remaining solutions is divided with
/// `Γ1 = O`, `Γ2 = A` (the smaller class inside the parts plays `Γ1`), and
/// every boundary set of `O` that no part sees is attached round-robin to a
/// set of some `A_i`, at most `ceil(4 c1 c2 f(b) b)` per part.
pub fn analysis_replay(
    inst: &CoverageInstance,
    a: &Solution,
    o: &Solution,
    provider: &dyn ExchangeProvider,
    oracle: &dyn SeparatorOracle,
    config: &ReplayConfig,
) -> Result<AnalysisReplay, CoverageError> {
    if config.b < 1 {
        return Err(CoverageError::InvalidParameter("b must be at least 1".into()));
    }
    inst.check_selection(&a.chosen)?;
    inst.check_selection(&o.chosen)?;
    let shared: Vec<usize> = a.chosen.iter().copied().filter(|s| o.chosen.contains(s)).collect();
    let reduced_a: Vec<usize> = a.chosen.iter().copied().filter(|s| !shared.contains(s)).collect();
    let reduced_o: Vec<usize> = o.chosen.iter().copied().filter(|s| !shared.contains(s)).collect();
    let removed = inst.union_of(&shared);
    let alg = union_minus(inst, &reduced_a, &removed).count_ones(..);
    let opt = union_minus(inst, &reduced_o, &removed).count_ones(..);

    let exchange = provider.build(inst, &reduced_a, &reduced_o)?;
    let exchange_violations = check_exchange_property(inst, &reduced_a, &reduced_o, &exchange);
    let r = config.r.unwrap_or(config.b);
    let q = config.q.unwrap_or(config.b);
    let f = oracle.bound();
    let fb = f.eval(config.b as f64);

    let h = exchange.to_graph();
    let division = if h.n() == 0 { None } else { Some(two_color_division(&h, oracle, r, q)?) };

    let (node_parts, boundary, part_boundary, c1, c2) = match &division {
        Some(td) => {
            let rep = crate::division::verify_division_with(&h, &td.division, crate::division::SizeRule::Any, &f);
            let c1 = rep.measured_c1 / q as f64;
            (td.division.parts.clone(), td.division.boundary.clone(), td.division.part_boundary.clone(), c1, rep.measured_c2)
        }
        None => (Vec::new(), Vec::new(), Vec::new(), 0.0, 0.0),
    };
    let t = node_parts.len();
    let (c1, c2) = (c1.max(1.0), c2.max(1.0));
    let capacity = (4.0 * c1 * c2 * fb * config.b as f64).ceil() as usize;

    let set_of = |node: usize| exchange.nodes[node].1;
    let side_of = |node: usize| exchange.nodes[node].0;
    let mut a_parts: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut o_parts: Vec<Vec<usize>> = vec![Vec::new(); t];
    for (i, p) in node_parts.iter().enumerate() {
        for &v in p {
            match side_of(v) {
                Side::A => a_parts[i].push(set_of(v)),
                Side::O => o_parts[i].push(set_of(v)),
            }
        }
    }
    let mut o_boundary: Vec<Vec<usize>> = part_boundary
        .iter()
        .map(|bnd| bnd.iter().filter(|&&v| side_of(v) == Side::O).map(|&v| set_of(v)).collect())
        .collect();
    let a_boundary: Vec<usize> = boundary.iter().filter(|&&v| side_of(v) == Side::A).map(|&v| set_of(v)).collect();

    // attach unseen boundary O sets
    let mut augmented = Vec::new();
    let mut overflow = 0;
    let mut added = vec![0usize; t];
    let mut cursor = 0;
    for &v in boundary.iter().filter(|&&v| side_of(v) == Side::O) {
        let s = set_of(v);
        if t == 0 || o_boundary.iter().any(|b| b.contains(&s)) {
            continue;
        }
        let order: Vec<usize> = (0..t).map(|k| (cursor + k) % t).collect();
        let target = order
            .iter()
            .copied()
            .find(|&i| added[i] < capacity && !a_parts[i].is_empty())
            .or_else(|| order.iter().copied().find(|&i| added[i] < capacity));
        let i = match target {
            Some(i) => i,
            None => {
                overflow += 1;
                cursor % t
            }
        };
        cursor = (i + 1) % t;
        added[i] += 1;
        o_boundary[i].push(s);
        let anchor = a_parts[i].first().or(o_parts[i].first()).copied().unwrap_or(s);
        augmented.push((s, anchor));
    }
    for b in o_boundary.iter_mut() {
        b.sort_unstable();
    }

    // element owners among A sets: part index, or t for boundary sets
    let universe = inst.universe_size();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (i, sets) in a_parts.iter().enumerate() {
        for e in union_minus(inst, sets, &removed).ones() {
            owners[e].push(i);
        }
    }
    for e in union_minus(inst, &a_boundary, &removed).ones() {
        owners[e].push(t);
    }
    let mut z_set = FixedBitSet::with_capacity(universe);
    let mut z_parts_only_set = FixedBitSet::with_capacity(universe);
    for (e, own) in owners.iter().enumerate() {
        let in_part = own.iter().any(|&i| i < t);
        if in_part && own.len() >= 2 {
            z_parts_only_set.insert(e);
        }
        if own.len() >= 2 || own.contains(&t) {
            z_set.insert(e);
        }
    }

    let mut parts = Vec::with_capacity(t);
    let mut lost_total = 0;
    let mut lost_total_parts_only = 0;
    let mut won_total = 0;
    let mut a_minus: Vec<usize>;
    for i in 0..t {
        let mut o_bar: Vec<usize> = o_parts[i].iter().chain(&o_boundary[i]).copied().collect();
        o_bar.sort_unstable();
        o_bar.dedup();
        let a_i = union_minus(inst, &a_parts[i], &removed);
        let mut lost_set = a_i.clone();
        lost_set.difference_with(&z_set);
        let mut lost_parts_only = a_i;
        lost_parts_only.difference_with(&z_parts_only_set);
        a_minus = reduced_a.iter().copied().filter(|s| !a_parts[i].contains(s)).collect();
        let z_i = union_minus(inst, &a_minus, &removed);
        let mut won_set = union_minus(inst, &o_bar, &removed);
        won_set.difference_with(&z_i);
        let (lost, won) = (lost_set.count_ones(..), won_set.count_ones(..));
        lost_total += lost;
        lost_total_parts_only += lost_parts_only.count_ones(..);
        won_total += won;

        // greedy order over Ō_i relative to Z_i
        let mut covered = z_i.clone();
        covered.union_with(&removed);
        let mut remaining = o_bar.clone();
        let mut greedy_order = Vec::new();
        let mut marginal_gains = Vec::new();
        let mut prefix_cover = Vec::new();
        let mut acc = 0;
        while !remaining.is_empty() {
            let (pos, gain) = remaining
                .iter()
                .enumerate()
                .map(|(p, &s)| (p, inst.set(s).difference_count(&covered)))
                .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
                .unwrap();
            let s = remaining.remove(pos);
            covered.union_with(inst.set(s));
            acc += gain;
            greedy_order.push(s);
            marginal_gains.push(gain);
            prefix_cover.push(acc);
        }
        let gains_non_increasing = marginal_gains.windows(2).all(|w| w[0] >= w[1]);
        let prefix_bound_holds =
            prefix_cover.iter().enumerate().all(|(j, &p)| p * o_bar.len() >= (j + 1) * won);

        let candidate = (!a_parts[i].is_empty()).then(|| {
            let take = a_parts[i].len().min(greedy_order.len());
            let into: Vec<usize> = greedy_order[..take].to_vec();
            let mut next: Vec<usize> = a.chosen.iter().copied().filter(|s| !a_parts[i].contains(s)).collect();
            next.extend(&into);
            let gain = inst.coverage_of(&next) as i64 - inst.coverage_of(&a.chosen) as i64;
            CandidateSwap { part: i, out: a_parts[i].clone(), into, gain, within_b: a_parts[i].len() <= config.b }
        });
        parts.push(PartReplay {
            a_sets: a_parts[i].clone(),
            o_sets: o_parts[i].clone(),
            o_boundary: o_boundary[i].clone(),
            o_bar,
            lost,
            won,
            greedy_order,
            marginal_gains,
            prefix_cover,
            gains_non_increasing,
            prefix_bound_holds,
            candidate,
        });
    }

    let z = z_set.count_ones(..);
    let z_parts_only = z_parts_only_set.count_ones(..);
    let min_ratio = parts
        .iter()
        .filter(|p| p.won > 0)
        .map(|p| p.lost as f64 / p.won as f64)
        .min_by(|x, y| x.partial_cmp(y).unwrap());
    let best_swap = parts
        .iter()
        .filter_map(|p| p.candidate.clone())
        .filter(|c| c.gain > 0)
        .fold(None, |best: Option<CandidateSwap>, c| match best {
            Some(b) if b.gain >= c.gain => Some(b),
            _ => Some(c),
        });
    Ok(AnalysisReplay {
        shared,
        reduced_a,
        reduced_o,
        exchange,
        exchange_violations,
        division,
        augmented,
        capacity,
        overflow,
        lost_claim: lost_total + z <= alg,
        won_claim: won_total + z >= opt,
        lost_claim_parts_only: lost_total_parts_only + z_parts_only <= alg,
        won_claim_parts_only: won_total + z_parts_only >= opt,
        prefix_bounds_hold: parts.iter().all(|p| p.prefix_bound_holds),
        gains_non_increasing: parts.iter().all(|p| p.gains_non_increasing),
        parts,
        alg,
        opt,
        z,
        z_parts_only,
        lost_total,
        won_total,
        c1,
        c2,
        threshold: 1.0 - 28.0 * c1 * c2 * fb / config.b as f64,
        min_ratio,
        best_swap,
    })
}
