//! Counts by weight, size and order through the vertex-1 decomposition.
//!
//! A hypergraph on `[l]` splits into `H1`, the edges through vertex 1 with
//! that vertex removed, and `H2`, the remaining edges. The two vertex sets
//! overlap arbitrarily inside `[2, l]`, which the trinomial counts.

use crate::counting::Variant;
use crate::scalar::{factorial, Exact};

/// `a! / ((b + c - a)! (a - b)! (a - c)!)`: the number of ways to write an
/// `a`-set as the union of a `b`-set and a `c`-set. Zero outside
/// `b, c <= a <= b + c`.
pub fn trinomial<T: Exact>(a: usize, b: usize, c: usize) -> T {
    if b > a || c > a || b + c < a {
        return T::zero();
    }
    factorial::<T>(a) / (factorial::<T>(b + c - a) * factorial::<T>(a - b) * factorial::<T>(a - c))
}

/// Memo table of `h_{n,m,l}` for all `n, m, l <= max_weight`, filled by
/// increasing weight.
#[derive(Clone, Debug)]
pub struct WeightTable<T> {
    max: usize,
    variant: Variant,
    cells: Vec<T>,
}

impl<T: Exact> WeightTable<T> {
    #[allow(clippy::needless_range_loop)]
    pub fn build(max_weight: usize, variant: Variant) -> Self {
        let max = max_weight;
        let dim = max + 1;
        let mut t = Self {
            max,
            variant,
            cells: vec![T::zero(); dim * dim * dim],
        };
        // Only the trinomials T(l-1, l1, l2) with l <= max are needed.
        let tri: Vec<Vec<Vec<T>>> = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| (0..dim).map(|c| trinomial(a, b, c)).collect())
                    .collect()
            })
            .collect();
        // For the multi variant: prefix[n][p][l] = sum_{r <= p} h[n][r][l],
        // covering every multiplicity q of the edge {1}.
        let mut prefix = vec![T::zero(); dim * dim * dim];
        let idx = |n: usize, m: usize, l: usize| (n * dim + m) * dim + l;

        t.cells[idx(0, 0, 0)] = T::one();
        for m in 0..dim {
            prefix[idx(0, m, 0)] = T::one();
        }
        for n in 1..=max {
            for m in 1..=n {
                for l in 1..=n {
                    let mut acc = T::zero();
                    for p in 1..=m.min(n) {
                        for n1 in 0..=(n - p) {
                            let n2 = n - p - n1;
                            // H1 has p or p-1 edges of total weight n1, H2 the other m-p.
                            if m - p > n2 {
                                continue;
                            }
                            for l1 in 0..=n1.min(l - 1) {
                                let first = match variant {
                                    Variant::Simple => {
                                        t.cells[idx(n1, p, l1)].clone() + t.cells[idx(n1, p - 1, l1)].clone()
                                    }
                                    Variant::Multi => prefix[idx(n1, p, l1)].clone(),
                                };
                                if first.is_zero() {
                                    continue;
                                }
                                let lo = (l - 1) - l1;
                                for l2 in lo..=n2.min(l - 1) {
                                    let second = &t.cells[idx(n2, m - p, l2)];
                                    if second.is_zero() {
                                        continue;
                                    }
                                    acc = acc + tri[l - 1][l1][l2].clone() * first.clone() * second.clone();
                                }
                            }
                        }
                    }
                    t.cells[idx(n, m, l)] = acc;
                }
            }
            for l in 0..dim {
                let mut run = T::zero();
                for m in 0..dim {
                    run = run + t.cells[idx(n, m, l)].clone();
                    prefix[idx(n, m, l)] = run.clone();
                }
            }
        }
        t
    }

    pub fn max_weight(&self) -> usize {
        self.max
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// `h_{n,m,l}`; zero outside the table.
    pub fn get(&self, n: usize, m: usize, l: usize) -> T {
        let dim = self.max + 1;
        if n > self.max || m > self.max || l > self.max {
            return T::zero();
        }
        self.cells[(n * dim + m) * dim + l].clone()
    }

    /// Number of hypergraphs of weight `n` and order `l`, any size.
    pub fn by_order(&self, n: usize, l: usize) -> T {
        (0..=self.max).fold(T::zero(), |acc, m| acc + self.get(n, m, l))
    }

    /// `sum_{m,l} h_{n,m,l}`.
    pub fn total(&self, n: usize) -> T {
        if n == 0 {
            return T::one();
        }
        (1..=n).fold(T::zero(), |acc, l| acc + self.by_order(n, l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trinomial_values() {
        // [2,3] as a union of a 1-set and a 2-set: the 1-set is either element.
        assert_eq!(trinomial::<i64>(2, 1, 2), 2);
        assert_eq!(trinomial::<i64>(2, 2, 2), 1);
        assert_eq!(trinomial::<i64>(2, 1, 1), 2);
        assert_eq!(trinomial::<i64>(0, 0, 0), 1);
        assert_eq!(trinomial::<i64>(3, 1, 1), 0);
        assert_eq!(trinomial::<i64>(1, 2, 0), 0);
    }

    #[test]
    fn trinomial_counts_set_covers() {
        // Brute force: ordered pairs (B, C) of subsets of [a] with B ∪ C = [a].
        for a in 0..=6usize {
            for b in 0..=a {
                for c in 0..=a {
                    let full = (1u32 << a) - 1;
                    let mut count = 0i64;
                    for x in 0..=full {
                        for y in 0..=full {
                            if x | y == full && x.count_ones() as usize == b && y.count_ones() as usize == c {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(trinomial::<i64>(a, b, c), count, "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn small_weights_by_hand() {
        // weight 2: ({1,2}) has m=1,l=2; ({1},{2}) m=2,l=2; ({1},{1}) m=2,l=1 (multi only)
        let s = WeightTable::<i64>::build(2, Variant::Simple);
        assert_eq!(s.get(2, 1, 2), 1);
        assert_eq!(s.get(2, 2, 2), 1);
        assert_eq!(s.get(2, 2, 1), 0);
        assert_eq!(s.total(2), 2);
        let m = WeightTable::<i64>::build(2, Variant::Multi);
        assert_eq!(m.get(2, 2, 1), 1);
        assert_eq!(m.total(2), 3);
    }
}
