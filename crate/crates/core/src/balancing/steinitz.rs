//! Steinitz orderings of zero-sum vectors in the unit cube and the chunked
//! partitions built from them.
//!
//! The ordering is built from the back. With `k` vectors still unplaced we
//! keep weights `lambda_i in [0, 1]` on them with `sum lambda_i b_i = 0` and
//! `sum lambda_i = k - d`. Shrinking the weights to sum `k - 1 - d` and then
//! moving along kernel directions of `d + 2` coordinates to a vertex leaves
//! some weight at zero; that vector goes to position `k`. Every prefix of
//! length `k` then sums to `sum (1 - lambda_i) b_i`, whose infinity norm is
//! at most `d`.
//!
//! The walk runs in floating point; the vertex it lands on is then solved
//! for exactly, so rational weights never carry more than one small linear
//! solve worth of digits. If the exact check rejects the floating point
//! support the walk is redone in exact arithmetic.

use super::{BalanceError, BalancedPartition};
use crate::scalar::Scalar;

fn check_dims<T>(vectors: &[Vec<T>]) -> Result<usize, BalanceError> {
    let d = vectors.first().map_or(0, Vec::len);
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != d {
            return Err(BalanceError::DimensionMismatch { index: i, expected: d, found: v.len() });
        }
    }
    Ok(d)
}

/// Largest infinity norm over all prefix sums of `vectors` taken in `order`.
pub fn max_prefix_norm<T: Scalar>(vectors: &[Vec<T>], order: &[usize]) -> T {
    let d = vectors.first().map_or(0, Vec::len);
    let mut acc = vec![T::zero(); d];
    let mut best = T::zero();
    for &i in order {
        for (a, x) in acc.iter_mut().zip(&vectors[i]) {
            *a = a.clone() + x.clone();
            best = T::max_of(best, a.abs());
        }
    }
    best
}

/// A nonzero solution of `m y = 0`, or `None` when the columns are
/// independent.
fn kernel_vector<T: Scalar>(mut m: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivot_col = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_negligible())
            .max_by(|&i, &j| m[i][c].abs().partial_cmp(&m[j][c].abs()).unwrap().then(j.cmp(&i)))
        else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        pivot_col.push(c);
        r += 1;
    }
    let free = (0..cols).find(|c| !pivot_col.contains(c))?;
    let mut y = vec![T::zero(); cols];
    y[free] = T::one();
    for (row, &c) in pivot_col.iter().enumerate() {
        y[c] = -m[row][free].clone();
    }
    Some(y)
}

/// Order of the vectors such that every prefix sum has infinity norm at most
/// `d` (within the `floor(3d/2)` contract). Requires `sum = 0` and every
/// `||b_i||_inf <= 1`.
pub fn steinitz_order<T: Scalar>(vectors: &[Vec<T>]) -> Result<Vec<usize>, BalanceError> {
    order_with(vectors, true)
}

fn order_with<T: Scalar>(vectors: &[Vec<T>], guided: bool) -> Result<Vec<usize>, BalanceError> {
    let n = vectors.len();
    let d = check_dims(vectors)?;
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().any(|x| (x.abs() - T::one()).is_strictly_positive()) {
            return Err(BalanceError::NormViolation { index: i });
        }
    }
    for c in 0..d {
        let s = vectors.iter().fold(T::zero(), |s, v| s + v[c].clone());
        if !(s.clone() / T::of_usize(n.max(1))).is_negligible() {
            return Err(BalanceError::UnbalancedInput(format!("coordinate {c} sums to {s}")));
        }
    }
    if n <= d + 1 {
        return Ok((0..n).collect());
    }

    let approx: Vec<Vec<f64>> = vectors.iter().map(|v| v.iter().map(Scalar::to_f64).collect()).collect();
    let mut w = Weights::new(n, d);
    let mut active = vec![true; n];
    let mut order = vec![usize::MAX; n];
    for k in (d + 1..=n).rev() {
        let removed = if k - 1 == d {
            (0..n).find(|&i| active[i]).unwrap()
        } else {
            let ratio = ((k - 1 - d) as i64, (k - d) as i64);
            if !(guided && w.snap_guided(vectors, &approx, &active, ratio)) {
                w.walk_exact(vectors, &active, ratio);
            }
            (0..n).find(|&i| active[i] && !w.one[i] && !w.frac.iter().any(|(j, _)| *j == i)).unwrap()
        };
        active[removed] = false;
        order[k - 1] = removed;
    }
    let mut rest = (0..n).filter(|&i| active[i]);
    for slot in order.iter_mut().take(d) {
        *slot = rest.next().unwrap();
    }
    Ok(order)
}

/// Weights `lambda` on the active vectors with `sum lambda_i b_i = 0`, kept
/// at a vertex: each is 0, 1 or one of at most `d + 1` fractional values.
struct Weights<T> {
    d: usize,
    one: Vec<bool>,
    /// Sum of `b_i` over the weights equal to 1.
    one_sum: Vec<T>,
    frac: Vec<(usize, T)>,
}

impl<T: Scalar> Weights<T> {
    fn new(n: usize, d: usize) -> Self {
        let start = T::from_ratio((n - d) as i64, n as i64);
        Weights { d, one: vec![false; n], one_sum: vec![T::zero(); d], frac: (0..n).map(|i| (i, start.clone())).collect() }
    }

    /// Scales the weights by `ratio`, walks to a vertex in floating point and
    /// recomputes the fractional weights exactly from the support found.
    /// Returns false when the floating point support does not check out.
    fn snap_guided(&mut self, b: &[Vec<T>], approx: &[Vec<f64>], active: &[bool], ratio: (i64, i64)) -> bool {
        let n = b.len();
        let f = ratio.0 as f64 / ratio.1 as f64;
        let mut x = vec![0.0f64; n];
        for i in (0..n).filter(|&i| active[i] && self.one[i]) {
            x[i] = f;
        }
        for (i, v) in &self.frac {
            x[*i] = v.to_f64() * f;
        }
        let pool: Vec<usize> = (0..n).filter(|&i| active[i] && x[i] > 0.0).collect();
        let support = walk_to_vertex(approx, self.d, &mut x, pool);
        let new_one: Vec<bool> = (0..n).map(|i| active[i] && x[i] == 1.0).collect();
        let target = T::from_ratio(ratio.0, 1);
        let mut one_sum = self.one_sum.clone();
        for i in (0..n).filter(|&i| new_one[i] != self.one[i]) {
            for (c, s) in one_sum.iter_mut().enumerate() {
                *s = if new_one[i] { s.clone() + b[i][c].clone() } else { s.clone() - b[i][c].clone() };
            }
        }
        let ones = new_one.iter().filter(|&&x| x).count();
        let Some(values) = solve_support(b, self.d, &support, &one_sum, target - T::of_usize(ones)) else {
            return false;
        };
        if values.iter().any(|v| v.is_strictly_negative() || (v.clone() - T::one()).is_strictly_positive()) {
            return false;
        }
        let has_zero = values.iter().any(Scalar::is_negligible)
            || (0..n).any(|i| active[i] && !new_one[i] && !support.contains(&i));
        if !has_zero {
            return false;
        }
        self.one = new_one;
        self.one_sum = one_sum;
        self.frac = support.into_iter().zip(values).filter(|(_, v)| !v.is_negligible()).collect();
        true
    }

    /// The same step carried out entirely in `T`.
    fn walk_exact(&mut self, b: &[Vec<T>], active: &[bool], ratio: (i64, i64)) {
        let n = b.len();
        let f = T::from_ratio(ratio.0, ratio.1);
        let mut x = vec![T::zero(); n];
        for i in (0..n).filter(|&i| active[i] && self.one[i]) {
            x[i] = f.clone();
        }
        for (i, v) in &self.frac {
            x[*i] = v.clone() * f.clone();
        }
        let pool: Vec<usize> = (0..n).filter(|&i| active[i] && !x[i].is_zero()).collect();
        let support = walk_to_vertex(b, self.d, &mut x, pool);
        self.one = (0..n).map(|i| active[i] && x[i] == T::one()).collect();
        self.one_sum = (0..self.d)
            .map(|c| (0..n).filter(|&i| self.one[i]).fold(T::zero(), |s, i| s + b[i][c].clone()))
            .collect();
        self.frac = support.into_iter().map(|i| (i, x[i].clone())).collect();
    }
}

/// Moves the weights `x` on `pool` along kernel directions of at most
/// `d + 2` fractional coordinates until the fractional columns `(b_i, 1)`
/// are independent, so at most `d + 1` remain strictly inside `(0, 1)`.
/// Coordinates reaching a bound are snapped to exactly 0 or 1. Returns the
/// fractional coordinates.
fn walk_to_vertex<T: Scalar>(b: &[Vec<T>], d: usize, x: &mut [T], mut pool: Vec<usize>) -> Vec<usize> {
    pool.retain(|&i| !x[i].is_negligible() && !(T::one() - x[i].clone()).is_negligible());
    while !pool.is_empty() {
        let width = pool.len().min(d + 2);
        let tail = pool.split_off(pool.len() - width);
        let mut mat: Vec<Vec<T>> = (0..d).map(|c| tail.iter().map(|&i| b[i][c].clone()).collect()).collect();
        mat.push(vec![T::one(); width]);
        let Some(y) = kernel_vector(mat) else {
            pool.extend(tail);
            break;
        };
        let mut best: Option<(T, usize)> = None;
        for (p, &i) in tail.iter().enumerate() {
            let t = if y[p].is_strictly_negative() {
                x[i].clone() / -y[p].clone()
            } else if y[p].is_strictly_positive() {
                (T::one() - x[i].clone()) / y[p].clone()
            } else {
                continue;
            };
            if best.as_ref().map_or(true, |(s, _)| t < *s) {
                best = Some((t, p));
            }
        }
        let (t, block) = best.expect("kernel vector is nonzero");
        for (p, &i) in tail.iter().enumerate() {
            let next = x[i].clone() + t.clone() * y[p].clone();
            x[i] = if p == block {
                if y[p].is_strictly_negative() {
                    T::zero()
                } else {
                    T::one()
                }
            } else if next.is_negligible() {
                T::zero()
            } else if (T::one() - next.clone()).is_negligible() {
                T::one()
            } else {
                next
            };
            if !x[i].is_zero() && x[i] != T::one() {
                pool.push(i);
            }
        }
    }
    pool
}

/// Solves `sum_{j in support} lambda_j b_j = -one_sum`,
/// `sum lambda_j = total` exactly. `None` unless the solution is unique.
fn solve_support<T: Scalar>(b: &[Vec<T>], d: usize, support: &[usize], one_sum: &[T], total: T) -> Option<Vec<T>> {
    let m = support.len();
    let mut rows: Vec<Vec<T>> = (0..d)
        .map(|c| support.iter().map(|&j| b[j][c].clone()).chain(std::iter::once(-one_sum[c].clone())).collect())
        .collect();
    rows.push(std::iter::repeat(T::one()).take(m).chain(std::iter::once(total)).collect());
    let mut r = 0;
    for c in 0..m {
        let p = (r..rows.len()).find(|&i| !rows[i][c].is_negligible())?;
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..=m {
                    let delta = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
            }
        }
        r += 1;
    }
    if rows[m..].iter().any(|row| !row[m].is_negligible()) {
        return None;
    }
    Some(rows[..m].iter().map(|row| row[m].clone()).collect())
}

/// Splits `0..n` into `k` consecutive segments of a Steinitz order of
/// `b_i = mean - a_i` (segment sizes differ by at most one, larger first).
/// Certificates are `mu - sum_{i in I_j} a_i` with `mu = sum a / k`.
pub fn vector_partition_steinitz<T: Scalar>(vectors: &[Vec<T>], k: usize) -> Result<BalancedPartition<T>, BalanceError> {
    let n = vectors.len();
    if k < 1 || k > n {
        return Err(BalanceError::InvalidParameter(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let d = check_dims(vectors)?;
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().any(|x| x.is_strictly_negative()) {
            return Err(BalanceError::NegativeCoordinate { index: i });
        }
        if v.iter().any(|x| (x.clone() - T::one()).is_strictly_positive()) {
            return Err(BalanceError::OutOfRange { index: i, detail: "coordinate above 1".into() });
        }
    }
    let total: Vec<T> = (0..d).map(|c| vectors.iter().fold(T::zero(), |s, v| s + v[c].clone())).collect();
    let mean: Vec<T> = total.iter().map(|t| t.clone() / T::of_usize(n)).collect();
    let b: Vec<Vec<T>> = vectors
        .iter()
        .map(|v| mean.iter().zip(v).map(|(m, x)| m.clone() - x.clone()).collect())
        .collect();
    let permutation = steinitz_order(&b)?;
    let mu: Vec<T> = total.iter().map(|t| t.clone() / T::of_usize(k)).collect();
    let (small, extra) = (n / k, n % k);
    let mut chunks = Vec::with_capacity(k);
    let mut certificates = Vec::with_capacity(k);
    let mut start = 0;
    for j in 0..k {
        let len = small + usize::from(j < extra);
        let chunk = permutation[start..start + len].to_vec();
        start += len;
        let cert = (0..d)
            .map(|c| chunk.iter().fold(mu[c].clone(), |s, &i| s - vectors[i][c].clone()))
            .collect();
        chunks.push(chunk);
        certificates.push(cert);
    }
    Ok(BalancedPartition { permutation, chunks, q_prime: None, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::balancing::steinitz_bound;
    use crate::rng::stream_rng;
    use crate::Rational;
    use rand::Rng as _;

    fn r(n: i64) -> Rational {
        Rational::from_ratio(n, 1)
    }

    fn is_perm(p: &[usize], n: usize) -> bool {
        let mut s = p.to_vec();
        s.sort_unstable();
        s == (0..n).collect::<Vec<_>>()
    }

    #[test]
    fn axis_pairs() {
        let v = vec![vec![r(1), r(0)], vec![r(-1), r(0)], vec![r(0), r(1)], vec![r(0), r(-1)]];
        let p = steinitz_order(&v).unwrap();
        assert!(is_perm(&p, 4));
        assert!(max_prefix_norm(&v, &p) <= r(2));
    }

    #[test]
    fn scalar_alternation() {
        let v = vec![vec![r(1)], vec![r(1)], vec![r(-1)], vec![r(-1)]];
        let p = steinitz_order(&v).unwrap();
        assert!(max_prefix_norm(&v, &p) <= r(1));
    }

    fn random_zero_sum(n: usize, d: usize, seed: u64) -> Vec<Vec<Rational>> {
        let mut rng = stream_rng(seed, 0);
        let a: Vec<Vec<Rational>> =
            (0..n).map(|_| (0..d).map(|_| Rational::from_ratio(rng.gen_range(0..=100), 100)).collect()).collect();
        let mean: Vec<Rational> =
            (0..d).map(|c| a.iter().fold(r(0), |s, v| s + v[c].clone()) / r(n as i64)).collect();
        a.iter().map(|v| mean.iter().zip(v).map(|(m, x)| m - x).collect()).collect()
    }

    #[test]
    fn random_prefixes_within_d() {
        for (d, seed) in [(1, 1), (2, 2), (3, 3), (5, 4)] {
            let v = random_zero_sum(60, d, seed);
            let p = steinitz_order(&v).unwrap();
            assert!(is_perm(&p, 60));
            let worst = max_prefix_norm(&v, &p);
            assert!(worst <= r(d as i64), "d={d}: {worst}");
            assert!(worst <= r(steinitz_bound(d) as i64));
        }
    }

    #[test]
    fn exact_walk_matches_the_contract() {
        for (d, seed) in [(1, 11), (2, 12), (4, 13)] {
            let v = random_zero_sum(50, d, seed);
            let p = order_with(&v, false).unwrap();
            assert!(is_perm(&p, 50));
            assert!(max_prefix_norm(&v, &p) <= r(d as i64));
        }
    }

    #[test]
    fn float_version_runs() {
        let v: Vec<Vec<f64>> = random_zero_sum(40, 2, 9)
            .iter()
            .map(|x| x.iter().map(Scalar::to_f64).collect())
            .collect();
        let p = steinitz_order(&v).unwrap();
        assert!(max_prefix_norm(&v, &p) <= 2.0 + 1e-6);
    }

    #[test]
    fn input_checks() {
        assert!(matches!(steinitz_order(&[vec![r(2)], vec![r(-2)]]), Err(BalanceError::NormViolation { index: 0 })));
        assert!(matches!(steinitz_order(&[vec![r(1)], vec![r(0)]]), Err(BalanceError::UnbalancedInput(_))));
    }

    #[test]
    fn partition_examples() {
        let a: Vec<Vec<Rational>> = [1, 0, 1, 0].iter().map(|&x| vec![r(x)]).collect();
        let p = vector_partition_steinitz(&a, 1).unwrap();
        assert_eq!(p.certificates, vec![vec![r(0)]]);
        let p = vector_partition_steinitz(&a, 2).unwrap();
        assert_eq!(p.chunks.len(), 2);
        assert!(p.certificates.iter().all(|c| c[0].abs() <= r(1)));

        let mut rng = stream_rng(5, 0);
        let a: Vec<Vec<Rational>> = (0..100)
            .map(|_| (0..2).map(|_| Rational::from_ratio(rng.gen_range(0..=20), 20)).collect())
            .collect();
        let p = vector_partition_steinitz(&a, 7).unwrap();
        assert!(p.check_structure().is_ok());
        for cert in &p.certificates {
            assert!(cert.iter().all(|x| x.abs() < r(7)));
        }
        assert!(vector_partition_steinitz(&a, 0).is_err());
    }
}
