//! Dobiński-type identities for hypergraphs of fixed weight.
//!
//! For the polynomial `P_n(m) = sum over λ ⊢ n of prod_i C(C(m,i), a_i)`
//! (multiset coefficients for the multi variant), `sum_m P_n(m)/m!` equals
//! `e` times a rational factor. The factor is computed two ways: from the
//! Newton forward differences of `P_n` at `0..=n`, since
//! `sum_m C(m,k)/m! = e/k!`, and as `sum_H 1/v(H)!` over nonisomorphic
//! hypergraphs of weight `n`, from the weight/order counts.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::counting::{partitions, Variant, WeightTable};
use crate::scalar::{binomial, binomial_big, factorial, Exact};

/// `P_n(m)`: number of weight-`n` hypergraphs of the variant whose vertices
/// are drawn from `[m]` (not up to isomorphism).
pub fn lhs_poly_eval<T: Exact>(n: usize, variant: Variant, m: usize) -> T {
    partitions(n).iter().fold(T::zero(), |acc, lam| {
        let prod = lam.parts().fold(T::one(), |p, (i, a)| {
            let slots: T = binomial(m, i);
            p * match variant {
                Variant::Simple => binomial_big(&slots, a),
                Variant::Multi => crate::scalar::multichoose(&slots, a),
            }
        });
        acc + prod
    })
}

/// `Δ^k f(0)` for `k = 0..values.len()`, from `values[j] = f(j)`.
fn forward_differences<T: Exact>(values: &[T]) -> Vec<T> {
    let mut row = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    while let Some(first) = row.first() {
        out.push(first.clone());
        row = row.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
    }
    out
}

/// Rational `q` with `sum_m f(m)/m! = e q` for a polynomial `f` given by its
/// values at `0..=deg`.
fn factor_from_values<T: Exact>(values: &[T]) -> Ratio<T> {
    forward_differences(values)
        .into_iter()
        .enumerate()
        .fold(Ratio::zero(), |acc, (k, d)| acc + Ratio::new(d, factorial(k)))
}

/// Factor at `e` on the polynomial side, via forward differences of `P_n`.
pub fn lhs_factor<T: Exact>(n: usize, variant: Variant) -> Ratio<T> {
    let values: Vec<T> = (0..=n).map(|m| lhs_poly_eval(n, variant, m)).collect();
    factor_from_values(&values)
}

/// Factor at `e` on the hypergraph side: `sum_H 1/v(H)!`.
pub fn rhs_factor<T: Exact>(n: usize, variant: Variant) -> Ratio<T> {
    rhs_factor_from(&WeightTable::build(n, variant), n)
}

pub fn rhs_factor_from<T: Exact>(table: &WeightTable<T>, n: usize) -> Ratio<T> {
    (1..=n).fold(Ratio::zero(), |acc, l| {
        acc + Ratio::new(table.by_order(n, l), factorial(l))
    })
}

/// One checked identity.
#[derive(Clone, Debug)]
pub struct DobinskiRow<T: Clone> {
    pub n: usize,
    pub variant: Variant,
    pub lhs: Ratio<T>,
    pub rhs: Ratio<T>,
}

impl<T: Exact> DobinskiRow<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug)]
pub struct DobinskiReport<T: Clone> {
    pub rows: Vec<DobinskiRow<T>>,
}

impl<T: Exact> DobinskiReport<T> {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(DobinskiRow::holds)
    }
}

impl<T: Exact> fmt::Display for DobinskiReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let v = match r.variant {
                Variant::Simple => "simple",
                Variant::Multi => "multi",
            };
            writeln!(
                f,
                "n={} {v}: lhs={} rhs={} {}",
                r.n,
                format_ratio(&r.lhs),
                format_ratio(&r.rhs),
                if r.holds() { "ok" } else { "MISMATCH" }
            )?;
        }
        Ok(())
    }
}

/// Checks `lhs_factor = rhs_factor` for `1 <= n <= n_max`, both variants.
pub fn verify_dobinski<T: Exact>(n_max: usize) -> DobinskiReport<T> {
    let mut rows = Vec::new();
    for variant in [Variant::Simple, Variant::Multi] {
        let table = WeightTable::<T>::build(n_max, variant);
        for n in 1..=n_max {
            rows.push(DobinskiRow {
                n,
                variant,
                lhs: lhs_factor(n, variant),
                rhs: rhs_factor_from(&table, n),
            });
        }
    }
    DobinskiReport { rows }
}

/// `num/den` in lowest terms, or just `num` for integers.
pub fn format_ratio<T: Exact>(r: &Ratio<T>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`format_ratio`]; rejects zero denominators.
pub fn parse_ratio<T: Exact + std::str::FromStr>(s: &str) -> Option<Ratio<T>> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.parse().ok()?, b.parse().ok()?),
        None => (s.parse().ok()?, T::one()),
    };
    (!den.is_zero()).then(|| Ratio::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate_weight;
    use crate::{Count, Ratio as BigRatio};
    use num_bigint::BigInt;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> Ratio<i64> {
        Ratio::new(a, b)
    }

    #[test]
    fn poly_examples() {
        for m in 0..=3 {
            assert_eq!(lhs_poly_eval::<i64>(1, Variant::Simple, m), m as i64);
        }
        assert_eq!(lhs_poly_eval::<i64>(2, Variant::Simple, 2), 2);
    }

    /// Hypergraphs on labels inside [m]: relabel each canonical form along
    /// every increasing injection [v] -> [m], which is C(m, v) distinct ones.
    #[test]
    fn poly_counts_labelled_hypergraphs() {
        for variant in [Variant::Simple, Variant::Multi] {
            for n in 1..=5 {
                let all = enumerate_weight(n, variant).unwrap();
                for m in 0..=5 {
                    let brute: i64 = all.iter().map(|h| binomial::<i64>(m, h.order())).sum();
                    assert_eq!(lhs_poly_eval::<i64>(n, variant, m), brute, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn poly_matches_order_counts() {
        for variant in [Variant::Simple, Variant::Multi] {
            let table = WeightTable::<i64>::build(6, variant);
            for n in 1..=6 {
                for m in 0..=6 {
                    let via_table: i64 = (0..=m).map(|l| binomial::<i64>(m, l) * table.by_order(n, l)).sum();
                    assert_eq!(lhs_poly_eval::<i64>(n, variant, m), via_table);
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        assert_eq!(lhs_factor::<i64>(3, Variant::Simple), r(11, 6));
        assert_eq!(lhs_factor::<i64>(4, Variant::Multi), r(65, 8));
        assert_eq!(lhs_factor::<i64>(1, Variant::Simple), r(1, 1));
        assert_eq!(lhs_factor::<i64>(1, Variant::Multi), r(1, 1));
        assert_eq!(rhs_factor::<i64>(3, Variant::Simple), r(11, 6));
        assert_eq!(rhs_factor::<i64>(2, Variant::Multi), r(2, 1));
        assert_eq!(rhs_factor::<i64>(4, Variant::Simple), r(25, 8));
    }

    #[test]
    fn listed_factors() {
        let simple: Vec<_> = (1..=4).map(|n| lhs_factor::<i64>(n, Variant::Simple)).collect();
        let multi: Vec<_> = (1..=4).map(|n| lhs_factor::<i64>(n, Variant::Multi)).collect();
        assert_eq!(simple, [r(1, 1), r(1, 1), r(11, 6), r(25, 8)]);
        // 89/8 is sometimes quoted for n = 4; direct summation over the 41
        // multi-hypergraphs of weight 4 gives 65/8.
        assert_eq!(multi, [r(1, 1), r(2, 1), r(23, 6), r(65, 8)]);
    }

    #[test]
    fn verify_small() {
        let rep = verify_dobinski::<i64>(1);
        assert_eq!(rep.rows.len(), 2);
        assert!(rep.all_hold());
        let rep = verify_dobinski::<Count>(4);
        assert_eq!(rep.rows.len(), 8);
        assert!(rep.all_hold());
    }

    #[test]
    fn degree_is_exactly_n() {
        for variant in [Variant::Simple, Variant::Multi] {
            for n in 1..=9 {
                let values: Vec<Count> = (0..=n + 1).map(|m| lhs_poly_eval(n, variant, m)).collect();
                let d = forward_differences(&values);
                assert!(d[n + 1].is_zero(), "n={n}");
                assert!(!d[n].is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn ratio_text() {
        assert_eq!(format_ratio(&r(22, 12)), "11/6");
        assert_eq!(format_ratio(&r(4, 2)), "2");
        assert_eq!(format_ratio(&r(-1, 3)), "-1/3");
        assert_eq!(parse_ratio::<i64>("11/6"), Some(r(11, 6)));
        assert_eq!(parse_ratio::<i64>("2"), Some(r(2, 1)));
        assert_eq!(parse_ratio::<i64>("1/0"), None);
        assert_eq!(parse_ratio::<i64>("x"), None);
    }

    /// e as a rational, accurate to far better than 1e-100.
    fn e_approx() -> BigRatio {
        (0..90usize).fold(BigRatio::zero(), |acc, k| {
            acc + BigRatio::new(BigInt::from(1), factorial(k))
        })
    }

    fn partial_sum(coeffs: &[BigRatio], terms: usize) -> BigRatio {
        let mut s = BigRatio::zero();
        for m in 0..=terms {
            let x = BigRatio::from_integer(BigInt::from(m));
            let val = coeffs
                .iter()
                .rev()
                .fold(BigRatio::zero(), |acc, c| acc * x.clone() + c.clone());
            s += val / BigRatio::from_integer(factorial::<BigInt>(m));
        }
        s
    }

    /// Factor for rational coefficients: scale to integers, then back.
    fn factor_of(coeffs: &[BigRatio]) -> BigRatio {
        let den = coeffs
            .iter()
            .fold(BigInt::from(1), |l, c| num_integer::Integer::lcm(&l, c.denom()));
        let scaled: Vec<BigRatio> = coeffs.iter().map(|c| c * BigRatio::from_integer(den.clone())).collect();
        let values: Vec<BigInt> = (0..coeffs.len().max(1))
            .map(|m| {
                let x = BigRatio::from_integer(BigInt::from(m));
                scaled
                    .iter()
                    .rev()
                    .fold(BigRatio::zero(), |acc, c| acc * x.clone() + c.clone())
                    .to_integer()
            })
            .collect();
        factor_from_values(&values) / BigRatio::from_integer(den)
    }

    fn tolerance() -> BigRatio {
        BigRatio::new(BigInt::from(1), BigInt::from(10).pow(30))
    }

    proptest! {
        #[test]
        fn finite_difference_factor_matches_series(
            coeffs in prop::collection::vec((-50i64..=50, 1i64..=12), 0..=9)
        ) {
            let coeffs: Vec<BigRatio> = coeffs
                .into_iter()
                .map(|(a, b)| BigRatio::new(BigInt::from(a), BigInt::from(b)))
                .collect();
            let q = factor_of(&coeffs);
            let series = partial_sum(&coeffs, 60);
            let diff = series - e_approx() * q;
            prop_assert!(diff.abs() < tolerance(), "diff = {}", diff);
        }
    }

    #[test]
    fn classical_dobinski_numerically() {
        let e = e_approx();
        for n in 0..=8u32 {
            let mut coeffs = vec![BigRatio::zero(); n as usize + 1];
            coeffs[n as usize] = BigRatio::from_integer(BigInt::from(1));
            let series = partial_sum(&coeffs, 60);
            let bell: BigInt = crate::counting::bell(n as usize);
            let diff = series - e.clone() * BigRatio::from_integer(bell);
            assert!(diff.abs() < tolerance(), "n={n}");
        }
    }
}
