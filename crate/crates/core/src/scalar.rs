//! Numeric abstraction used by the balancing routines.
//!
//! Everything that computes discrepancies is written against [`Scalar`], so
//! the same code runs on exact rationals (the default, used for all
//! certificates) and on `f32`/`f64` when approximate answers are enough.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// A signed ordered field element.
///
/// Exact types report a zero [`tolerance`](Scalar::tolerance); floating point
/// types report a small absolute slack that the sign tests use.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync
{
    /// Absolute slack for sign and equality tests.
    fn tolerance() -> Self;

    /// `num / den` in this scalar type.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// True when the value is zero up to [`Scalar::tolerance`].
    fn is_negligible(&self) -> bool {
        self.abs() <= Self::tolerance()
    }

    fn is_strictly_positive(&self) -> bool {
        *self > Self::tolerance()
    }

    fn is_strictly_negative(&self) -> bool {
        *self < -Self::tolerance()
    }

    fn of_usize(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize fits scalar")
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-9
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-4
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigRational {
    fn tolerance() -> Self {
        Self::zero()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

macro_rules! impl_small_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn tolerance() -> Self {
                Self::zero()
            }
            fn from_ratio(num: i64, den: i64) -> Self {
                Ratio::new(num as $int, den as $int)
            }
            fn to_f64(&self) -> f64 {
                *self.numer() as f64 / *self.denom() as f64
            }
        }
    };
}

impl_small_ratio!(i64);
impl_small_ratio!(i128);

/// Parses `"3"`, `"-3/4"` or a decimal such as `"0.25"` into a scalar.
///
/// Decimals are converted exactly (`0.25` becomes `1/4`), so parsing never
/// rounds for rational scalar types.
pub fn parse_scalar<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: i64 = n.trim().parse().ok()?;
        let d: i64 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(T::from_ratio(n, d));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if frac_part.len() > 15 || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_abs: i64 = int_part.trim_start_matches('-').parse().unwrap_or(0);
        let scale = 10i64.checked_pow(frac_part.len() as u32)?;
        let frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().ok()? };
        let num = int_abs.checked_mul(scale)?.checked_add(frac)?;
        return Some(T::from_ratio(if negative { -num } else { num }, scale));
    }
    let n: i64 = text.parse().ok()?;
    Some(T::from_ratio(n, 1))
}
