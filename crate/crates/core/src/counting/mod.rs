//! Exact enumeration of ordered hypergraphs by order, by weight and by edge
//! type, plus Bell numbers and integer partitions.

mod enumerate;
mod table;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;
use crate::scalar::{binomial, binomial_big, multichoose, Exact};

pub use enumerate::{enumerate_weight, enumerate_weight_capped, for_each_weight, DEFAULT_ENUMERATION_CAP};
pub use table::{trinomial, WeightTable};

/// Simple hypergraphs only, or all hypergraphs (repeated edges allowed).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Simple,
    Multi,
}

/// Method for counting simple hypergraphs by order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderMethod {
    /// `h_n = 2^(2^n - 1) - sum_{j<n} C(n,j) h_j`.
    Recurrence,
    /// Inclusion-exclusion over the vertex set.
    Explicit,
    /// Split off the edges through vertex 1 and merge the two vertex sets.
    Convolution,
}

/// Method for counting hypergraphs by weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightMethod {
    PartitionSum,
    Recurrence,
}

/// Integer partition `1^a_1 2^a_2 … l^a_l`, read as "a_i edges of cardinality i".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeType {
    /// `multiplicities[i - 1] = a_i`; the last entry is positive.
    multiplicities: Vec<usize>,
}

impl EdgeType {
    pub fn new(mut multiplicities: Vec<usize>) -> Result<Self> {
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        if multiplicities.is_empty() {
            return Err(Error::InvalidEdgeType("no parts".into()));
        }
        Ok(Self { multiplicities })
    }

    /// From a list of parts in any order.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidEdgeType("parts must be positive".into()));
        }
        let top = parts.iter().copied().max().unwrap_or(0);
        let mut m = vec![0; top];
        for &p in parts {
            m[p - 1] += 1;
        }
        Self::new(m)
    }

    /// Edge type of a nonempty hypergraph.
    pub fn of(h: &OrderedHypergraph) -> Option<Self> {
        Self::new(h.cardinality_counts()).ok()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// `a_i`, zero beyond the largest part.
    pub fn count(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|j| self.multiplicities.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.multiplicities.iter().enumerate().map(|(i, a)| (i + 1) * a).sum()
    }

    pub fn largest_part(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i + 1, a))
    }
}

/// `1^2 4^1`: ascending part sizes with positive multiplicity.
impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, a)) in self.parts().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}^{a}")?;
        }
        Ok(())
    }
}

/// Accepts `i^a` tokens or bare parts, separated by spaces or commas.
impl FromStr for EdgeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::InvalidEdgeType(format!("bad token {t:?} in {s:?}"));
        let mut parts = Vec::new();
        for tok in s.split([' ', ',', '\t']).filter(|t| !t.is_empty()) {
            let (part, mult) = match tok.split_once('^') {
                Some((i, a)) => (i, a),
                None => (tok, "1"),
            };
            let part: usize = part.parse().map_err(|_| bad(tok))?;
            let mult: usize = mult.parse().map_err(|_| bad(tok))?;
            if part == 0 {
                return Err(bad(tok));
            }
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Self::from_parts(&parts)
    }
}

/// Number of set partitions of an `n`-element set, via the Bell triangle.
pub fn bell<T: Exact>(n: usize) -> T {
    let mut row = vec![T::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for x in &row {
            let v = next.last().unwrap().clone() + x.clone();
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// All partitions of `n`, as ascending part lists in lexicographic order.
pub fn partitions(n: usize) -> Vec<EdgeType> {
    fn go(rem: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<EdgeType>) {
        if rem == 0 {
            out.push(EdgeType::from_parts(cur).expect("nonempty"));
            return;
        }
        for p in min..=rem {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of nonisomorphic simple hypergraphs with exactly `n` vertices.
pub fn h_order<T: Exact>(n: usize, method: OrderMethod) -> T {
    // 2^(2^j - 1): simple hypergraphs with vertices inside [j].
    let power_set = |j: usize| T::pow2((1usize << j) - 1);
    match method {
        OrderMethod::Explicit => (0..=n)
            .map(|j| {
                let t = binomial::<T>(n, j) * power_set(j);
                if (n - j).is_multiple_of(2) {
                    t
                } else {
                    -t
                }
            })
            .fold(T::zero(), |a, b| a + b),
        OrderMethod::Recurrence => {
            let mut h: Vec<T> = vec![T::one()];
            for m in 1..=n {
                let lower = (0..m).fold(T::zero(), |acc, j| acc + binomial::<T>(m, j) * h[j].clone());
                h.push(power_set(m) - lower);
            }
            h[n].clone()
        }
        OrderMethod::Convolution => {
            let mut h: Vec<T> = vec![T::one()];
            for m in 1..=n {
                let a = m - 1;
                let mut s = T::zero();
                for k in 0..=a {
                    for l in (a - k)..=a {
                        s = s + trinomial::<T>(a, k, l) * h[k].clone() * h[l].clone();
                    }
                }
                let two = T::one() + T::one();
                h.push(two * s - h[a].clone());
            }
            h[n].clone()
        }
    }
}

/// `sum_{m=j}^{n} (-1)^(m-j) C(m, j)`.
fn alternating_tail<T: Exact>(j: usize, n: usize) -> T {
    (j..=n).fold(T::zero(), |acc, m| {
        let t = binomial::<T>(m, j);
        if (m - j).is_multiple_of(2) {
            acc + t
        } else {
            acc - t
        }
    })
}

/// Number of nonisomorphic hypergraphs of weight `|λ|` with edge type `λ`.
pub fn count_edge_type<T: Exact>(lambda: &EdgeType, variant: Variant) -> T {
    let n = lambda.weight();
    let l = lambda.largest_part();
    let mut total = T::zero();
    for j in l..=n {
        let mut prod = T::one();
        for (i, a) in lambda.parts() {
            let slots: T = binomial(j, i);
            prod = prod
                * match variant {
                    Variant::Simple => binomial_big(&slots, a),
                    Variant::Multi => multichoose(&slots, a),
                };
            if prod.is_zero() {
                break;
            }
        }
        if !prod.is_zero() {
            total = total + prod * alternating_tail::<T>(j, n);
        }
    }
    assert!(!total.is_negative(), "edge-type count went negative for {lambda}");
    total
}

/// Number of nonisomorphic hypergraphs (simple or all) with weight `n`.
pub fn h_weight<T: Exact>(n: usize, variant: Variant, method: WeightMethod) -> T {
    match method {
        WeightMethod::PartitionSum => partitions(n)
            .iter()
            .fold(T::zero(), |acc, lam| acc + count_edge_type::<T>(lam, variant)),
        WeightMethod::Recurrence => WeightTable::<T>::build(n, variant).total(n),
    }
}

/// Number of nonisomorphic hypergraphs with weight `n`, size `m` and order `l`.
pub fn h_weight_indexed<T: Exact>(n: usize, m: usize, l: usize, variant: Variant) -> T {
    if m > n || l > n {
        return T::zero();
    }
    WeightTable::<T>::build(n, variant).get(n, m, l)
}

/// `b_n <= h'_n <= h''_n <= 2^(n-1) b_n`.
pub fn check_bounds(n: usize) -> bool {
    check_bounds_with::<crate::Count>(n)
}

pub fn check_bounds_with<T: Exact>(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let b: T = bell(n);
    let simple: T = h_weight(n, Variant::Simple, WeightMethod::Recurrence);
    let multi: T = h_weight(n, Variant::Multi, WeightMethod::Recurrence);
    let top = T::pow2(n - 1) * b.clone();
    b <= simple && simple <= multi && multi <= top
}
