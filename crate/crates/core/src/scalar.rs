//! Exact scalar types for the counting code.
//!
//! Every enumeration formula in this crate is evaluated over a type implementing
//! [`Exact`]: a signed integer ring with exact division where it is divisible.
//! [`BigInt`](num_bigint::BigInt) is the default. Fixed-width types (`i64`,
//! `i128`) are valid as long as every intermediate value fits; they overflow
//! otherwise, which panics in debug builds.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type usable by the counting routines.
pub trait Exact:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("usize does not fit the scalar type")
    }

    /// `2^e`, by repeated squaring.
    fn pow2(e: usize) -> Self {
        num_traits::pow(Self::one() + Self::one(), e)
    }
}

impl<T> Exact for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// `C(n, k)` computed by the multiplicative formula; zero when `k > n`.
pub fn binomial<T: Exact>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after each step.
        acc = acc * T::from_usize_exact(n - i) / T::from_usize_exact(i + 1);
    }
    acc
}

/// `C(x, k)` for a scalar top argument `x >= 0`.
pub fn binomial_big<T: Exact>(x: &T, k: usize) -> T {
    if k == 0 {
        return T::one();
    }
    if x.is_negative() || *x < T::from_usize_exact(k) {
        return T::zero();
    }
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * (x.clone() - T::from_usize_exact(i)) / T::from_usize_exact(i + 1);
    }
    acc
}

/// Number of `k`-element multisets from an `x`-element set: `C(x + k - 1, k)`.
///
/// Evaluated as the rising product `x (x+1) ... (x+k-1) / k!`, so `x = 0`
/// gives `0` for `k > 0` and `1` for `k = 0`.
pub fn multichoose<T: Exact>(x: &T, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * (x.clone() + T::from_usize_exact(i)) / T::from_usize_exact(i + 1);
    }
    acc
}

pub fn factorial<T: Exact>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * T::from_usize_exact(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(5, 6), 0);
        assert_eq!(binomial::<i64>(0, 0), 1);
        assert_eq!(binomial::<BigInt>(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn big_top_binomial_matches_usize_version() {
        for n in 0..20usize {
            for k in 0..22usize {
                assert_eq!(binomial_big::<i64>(&(n as i64), k), binomial::<i64>(n, k));
            }
        }
    }

    #[test]
    fn multichoose_edges() {
        assert_eq!(multichoose::<i64>(&0, 0), 1);
        assert_eq!(multichoose::<i64>(&0, 3), 0);
        assert_eq!(multichoose::<i64>(&3, 2), 6);
        assert_eq!(multichoose::<i64>(&4, 4), binomial::<i64>(7, 4));
    }

    #[test]
    fn pow2_and_factorial() {
        assert_eq!(i64::pow2(10), 1024);
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i128>(20), 2432902008176640000);
    }
}
