use std::cmp::Ordering;

use super::{BalanceError, BalancedPartition};
use crate::scalar::Scalar;

/// Nonnegative 2-vectors `(a_i, b_i)` with `a_i + b_i` in `[c_low, c_high]`
/// and `sum a = alpha * sum b`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoVectorSet<T> {
    pub a: Vec<T>,
    pub b: Vec<T>,
    pub alpha: T,
    pub c_low: T,
    pub c_high: T,
}

fn cmp<T: PartialOrd>(x: &T, y: &T) -> Ordering {
    x.partial_cmp(y).unwrap_or(Ordering::Equal)
}

impl<T: Scalar> TwoVectorSet<T> {
    pub fn new(pairs: Vec<(T, T)>, alpha: T, c_low: T, c_high: T) -> Result<Self, BalanceError> {
        if !c_low.is_strictly_positive() || c_low > c_high {
            return Err(BalanceError::InvalidParameter(format!("need 0 < c' <= c, got [{c_low}, {c_high}]")));
        }
        if alpha.is_strictly_negative() || (alpha.clone() - T::one()).is_strictly_positive() {
            return Err(BalanceError::InvalidParameter(format!("alpha = {alpha} is outside [0, 1]")));
        }
        let (a, b): (Vec<T>, Vec<T>) = pairs.into_iter().unzip();
        for i in 0..a.len() {
            if a[i].is_strictly_negative() || b[i].is_strictly_negative() {
                return Err(BalanceError::NegativeCoordinate { index: i });
            }
            let total = a[i].clone() + b[i].clone();
            if (c_low.clone() - total.clone()).is_strictly_positive() || (total.clone() - c_high.clone()).is_strictly_positive() {
                return Err(BalanceError::OutOfRange {
                    index: i,
                    detail: format!("a + b = {total} not in [{c_low}, {c_high}]"),
                });
            }
        }
        let set = TwoVectorSet { a, b, alpha, c_low, c_high };
        set.check_sum()?;
        Ok(set)
    }

    /// Same as [`TwoVectorSet::new`] with `alpha = sum a / sum b`. Fails when
    /// `sum b` is zero.
    pub fn with_ratio_alpha(pairs: Vec<(T, T)>, c_low: T, c_high: T) -> Result<Self, BalanceError> {
        let sa = pairs.iter().fold(T::zero(), |s, p| s + p.0.clone());
        let sb = pairs.iter().fold(T::zero(), |s, p| s + p.1.clone());
        if sb.is_negligible() {
            return Err(BalanceError::EmptyColorClass(1));
        }
        Self::new(pairs, sa / sb, c_low, c_high)
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `d_i = a_i - alpha * b_i`.
    pub fn differences(&self) -> Vec<T> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| a.clone() - self.alpha.clone() * b.clone())
            .collect()
    }

    fn check_sum(&self) -> Result<(), BalanceError> {
        let total = self.differences().into_iter().fold(T::zero(), |s, d| s + d);
        let scale = T::one() + T::of_usize(self.len()) * self.c_high.clone();
        if !(total.clone() / scale).is_negligible() {
            return Err(BalanceError::UnbalancedInput(format!("sum of a - alpha * b is {total}")));
        }
        Ok(())
    }
}

/// Sorted bucket of `(d_i, i)` supporting nearest-value removal.
struct Bucket<T> {
    items: Vec<(T, usize)>,
}

impl<T: Scalar> Bucket<T> {
    fn new(mut items: Vec<(T, usize)>) -> Self {
        items.sort_by(|x, y| cmp(&x.0, &y.0).then(x.1.cmp(&y.1)));
        Bucket { items }
    }

    fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Position of the lowest index among entries equal to `items[pos]`.
    fn first_equal(&self, pos: usize) -> usize {
        let v = &self.items[pos].0;
        self.items.partition_point(|x| cmp(&x.0, v) == Ordering::Less)
    }

    /// Removes the entry whose value is closest to `target` (lowest index on
    /// ties) and returns it.
    fn take_nearest(&mut self, target: &T) -> (T, usize) {
        let split = self.items.partition_point(|x| cmp(&x.0, target) != Ordering::Greater);
        let below = split.checked_sub(1).map(|p| self.first_equal(p));
        let above = (split < self.items.len()).then_some(split);
        let pos = match (below, above) {
            (Some(lo), Some(hi)) => {
                let dl = target.clone() - self.items[lo].0.clone();
                let dh = self.items[hi].0.clone() - target.clone();
                match cmp(&dl, &dh) {
                    Ordering::Less => lo,
                    Ordering::Greater => hi,
                    Ordering::Equal => {
                        if self.items[lo].1 < self.items[hi].1 {
                            lo
                        } else {
                            hi
                        }
                    }
                }
            }
            (Some(lo), None) => lo,
            (None, Some(hi)) => hi,
            (None, None) => unreachable!("bucket is not empty"),
        };
        self.items.remove(pos)
    }
}

/// Permutation keeping every running sum of `d_{p_j}` within `[-c, c]`
/// (`c = c_high`). Uses the three-bucket rule: when the running sum is
/// negative take a positive difference, when positive a negative one, when
/// zero anything. Within the required bucket the entry that brings the sum
/// closest to zero is taken.
pub fn balance_permutation<T: Scalar>(v: &TwoVectorSet<T>) -> Result<Vec<usize>, BalanceError> {
    v.check_sum()?;
    let d = v.differences();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    for (i, x) in d.iter().enumerate() {
        if x.is_strictly_positive() {
            pos.push((x.clone(), i));
        } else if x.is_strictly_negative() {
            neg.push((x.clone(), i));
        } else {
            zero.push(i);
        }
    }
    let mut pos = Bucket::new(pos);
    let mut neg = Bucket::new(neg);
    let mut zero = zero.into_iter();
    let mut delta = T::zero();
    let mut perm = Vec::with_capacity(d.len());
    for _ in 0..d.len() {
        let target = -delta.clone();
        let (x, i) = if delta.is_strictly_negative() && !pos.is_empty() {
            pos.take_nearest(&target)
        } else if delta.is_strictly_positive() && !neg.is_empty() {
            neg.take_nearest(&target)
        } else if let Some(i) = zero.next() {
            (d[i].clone(), i)
        } else if pos.is_empty() {
            neg.take_nearest(&target)
        } else if neg.is_empty() {
            pos.take_nearest(&target)
        } else {
            // running sum is zero: smallest magnitude from either side
            let p = pos.items[0].clone();
            let q = neg.items[neg.first_equal(neg.items.len() - 1)].clone();
            if cmp(&p.0, &-q.0.clone()) == Ordering::Greater || (p.0 == -q.0.clone() && q.1 < p.1) {
                neg.take_nearest(&q.0)
            } else {
                pos.take_nearest(&p.0)
            }
        };
        delta = delta + x;
        perm.push(i);
    }
    Ok(perm)
}

/// Consecutive pieces of a permutation with sizes `q' + 1` (the first `p`)
/// and `q'` (the rest), where `k = floor(n / q)`, `w = floor((n mod q) / k)`,
/// `q' = q + w` and `p = n - q' * k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunking {
    pub k: usize,
    pub q_prime: usize,
    pub chunks: Vec<Vec<usize>>,
}

pub fn chunk_permutation(perm: &[usize], q: usize) -> Result<Chunking, BalanceError> {
    let n = perm.len();
    if q < 1 {
        return Err(BalanceError::InvalidParameter("q must be at least 1".into()));
    }
    if n < q {
        return Err(BalanceError::InvalidParameter(format!(
            "need at least q = {q} vectors to form a chunk, got {n}; lower q"
        )));
    }
    let k = n / q;
    let z = n % q;
    let w = z / k;
    let q_prime = q + w;
    let p = n - q_prime * k;
    let mut chunks = Vec::with_capacity(k);
    let mut start = 0;
    for j in 0..k {
        let len = if j < p { q_prime + 1 } else { q_prime };
        chunks.push(perm[start..start + len].to_vec());
        start += len;
    }
    debug_assert_eq!(start, n);
    Ok(Chunking { k, q_prime, chunks })
}

/// [`balance_permutation`] followed by [`chunk_permutation`]; certificates
/// hold each chunk's `sum (a_i - alpha * b_i)`.
pub fn partition_two_vectors<T: Scalar>(v: &TwoVectorSet<T>, q: usize) -> Result<BalancedPartition<T>, BalanceError> {
    let permutation = balance_permutation(v)?;
    let chunking = chunk_permutation(&permutation, q)?;
    let d = v.differences();
    let certificates = chunking
        .chunks
        .iter()
        .map(|c| vec![c.iter().fold(T::zero(), |s, &i| s + d[i].clone())])
        .collect();
    Ok(BalancedPartition { permutation, chunks: chunking.chunks, q_prime: Some(chunking.q_prime), certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn running_sums(d: &[Rational], perm: &[usize]) -> Vec<Rational> {
        let mut acc = Rational::from_ratio(0, 1);
        let mut out = vec![acc.clone()];
        for &i in perm {
            acc += d[i].clone();
            out.push(acc.clone());
        }
        out
    }

    #[test]
    fn alternating_unit_vectors() {
        let pairs = vec![(r(1, 1), r(0, 1)), (r(0, 1), r(1, 1)), (r(1, 1), r(0, 1)), (r(0, 1), r(1, 1))];
        let v = TwoVectorSet::new(pairs, r(1, 1), r(1, 1), r(1, 1)).unwrap();
        let perm = balance_permutation(&v).unwrap();
        let sums = running_sums(&v.differences(), &perm);
        assert!(sums.iter().all(|s| s.abs() <= r(1, 1)));
        // signs alternate
        let d = v.differences();
        for w in perm.windows(2) {
            assert_ne!(d[w[0]], d[w[1]]);
        }
    }

    #[test]
    fn single_vector() {
        let v = TwoVectorSet::new(vec![(r(1, 2), r(1, 2))], r(1, 1), r(1, 2), r(1, 1)).unwrap();
        let perm = balance_permutation(&v).unwrap();
        assert_eq!(perm, vec![0]);
        assert_eq!(running_sums(&v.differences(), &perm), vec![r(0, 1), r(0, 1)]);
    }

    #[test]
    fn unbalanced_is_rejected() {
        let e = TwoVectorSet::new(vec![(r(1, 1), r(0, 1))], r(1, 1), r(1, 1), r(1, 1));
        assert!(matches!(e, Err(BalanceError::UnbalancedInput(_))));
    }

    #[test]
    fn chunk_examples() {
        let perm: Vec<usize> = (0..10).collect();
        let c = chunk_permutation(&perm, 3).unwrap();
        assert_eq!((c.k, c.q_prime), (3, 3));
        assert_eq!(c.chunks.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 3, 3]);
        let c = chunk_permutation(&perm[..4], 4).unwrap();
        assert_eq!((c.k, c.q_prime, c.chunks.len()), (1, 4, 1));
        let perm: Vec<usize> = (0..25).collect();
        let c = chunk_permutation(&perm, 4).unwrap();
        assert_eq!(c.chunks.iter().map(Vec::len).collect::<Vec<_>>(), vec![5, 4, 4, 4, 4, 4]);
        assert!(chunk_permutation(&perm, 0).is_err());
        assert!(chunk_permutation(&perm[..3], 4).is_err());
    }

    #[test]
    fn floats_work_too() {
        let pairs = vec![(0.3, 0.6), (0.5, 0.4), (0.2, 0.7), (0.6, 0.3)];
        let v = TwoVectorSet::<f64>::with_ratio_alpha(pairs, 0.5, 1.0).unwrap();
        let p = partition_two_vectors(&v, 2).unwrap();
        assert!(p.check_structure().is_ok());
        assert!(p.certificates.iter().all(|c| c[0].abs() <= 2.0));
    }
}
