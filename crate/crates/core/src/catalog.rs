//! Named forbidden patterns and their exact extremal functions.
//!
//! The registry holds the singleton family `S_k = ({1},…,{k})` and the 39
//! base patterns `F_1…F_39` of weight at most four. Sixteen of them differ
//! from their reversal, giving 55 isomorphism classes in total.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::{parse_hypergraph, OrderedHypergraph};
use crate::scalar::{binomial, Exact};
use crate::Count;

/// Base patterns in row order, as canonical literals.
const BASE: [&str; 39] = [
    "1", "1|1", "1|2", "1,2", "1|1|1", "1|1|2", "1|2|3", "1|1,2", "1|2,3", "1,3|2", "1,2,3", "1|1|1|1", "1|1|1|2",
    "1|1|2|2", "1|1|2|3", "1|2|2|3", "1|2|3|4", "1|1|1,2", "1|1|2,3", "1,3|2|2", "1|2|2,3", "1|2,3|3", "1|1,3|2",
    "1|1,2|2", "1|2|3,4", "1|2,4|3", "1|2,3|4", "1,4|2|3", "1,2|1,3", "1,2|2,3", "1,2|1,2", "1,2|3,4", "1,4|2,3",
    "1,3|2,4", "1|1,2,3", "1,2,3|2", "1|2,3,4", "1,3,4|2", "1,2,3,4",
];

/// Rows whose pattern is not isomorphic to its reversal.
const BARRED: [u8; 16] = [6, 8, 9, 13, 15, 18, 19, 21, 22, 23, 25, 26, 29, 35, 37, 38];

/// Handle into the pattern registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    /// `S_k`, `k` distinct singleton edges.
    Singleton(usize),
    /// `F_index`, or its reversal.
    Numbered { index: u8, reversed: bool },
}

/// Which extremal function: edges (`ex_e`) or incidences (`ex_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    Edges,
    Incidences,
}

/// Value of an extremal function, undefined only for `F_1 = ({1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExValue<T = Count> {
    Defined(T),
    Undefined,
}

impl<T> ExValue<T> {
    pub fn defined(self) -> Option<T> {
        match self {
            ExValue::Defined(v) => Some(v),
            ExValue::Undefined => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for ExValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExValue::Defined(v) => write!(f, "{v}"),
            ExValue::Undefined => f.write_str("undefined"),
        }
    }
}

pub fn is_barred(index: u8) -> bool {
    BARRED.contains(&index)
}

impl PatternId {
    pub fn numbered(index: u8) -> Self {
        PatternId::Numbered { index, reversed: false }
    }

    pub fn reversed(index: u8) -> Self {
        PatternId::Numbered { index, reversed: true }
    }

    /// Checks the id and normalizes `reversed` to `false` on self-reverse rows.
    pub fn validate(self) -> Result<Self> {
        match self {
            PatternId::Singleton(0) => Err(Error::InvalidPattern("S0".into())),
            PatternId::Singleton(_) => Ok(self),
            PatternId::Numbered { index, .. } if !(1..=39).contains(&index) => {
                Err(Error::InvalidPattern(format!("F{index}")))
            }
            PatternId::Numbered { index, reversed } => Ok(PatternId::Numbered {
                index,
                reversed: reversed && is_barred(index),
            }),
        }
    }

    /// The 55 catalog classes: each row, followed by its reversal when barred.
    pub fn all() -> Vec<PatternId> {
        let mut out = Vec::with_capacity(55);
        for index in 1..=39u8 {
            out.push(PatternId::numbered(index));
            if is_barred(index) {
                out.push(PatternId::reversed(index));
            }
        }
        out
    }

    /// Catalog entry isomorphic to `h`, preferring a numbered row, or the
    /// singleton pattern if `h` is some `S_k` outside the table.
    pub fn identify(h: &OrderedHypergraph) -> Option<PatternId> {
        let c = h.canonicalize();
        if c.weight() <= 4 {
            if let Some(id) = PatternId::all()
                .into_iter()
                .find(|id| pattern_of(*id).ok().as_ref() == Some(&c))
            {
                return Some(id);
            }
        }
        singleton_index(&c).map(PatternId::Singleton)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::Singleton(k) => write!(f, "S{k}"),
            PatternId::Numbered { index, reversed } => {
                write!(f, "F{index}{}", if *reversed { "r" } else { "" })
            }
        }
    }
}

/// Parses `S3`, `F30`, `F29r`. A reversal suffix on a self-reverse row is an error.
impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPattern(s.to_string());
        let t = s.trim();
        let (kind, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        match kind {
            "S" | "s" => {
                let k: usize = digits(rest).ok_or_else(bad)?;
                PatternId::Singleton(k).validate()
            }
            "F" | "f" => {
                let (num, reversed) = match rest.strip_suffix(['r', 'R']) {
                    Some(num) => (num, true),
                    None => (rest, false),
                };
                let index: u8 = digits(num).ok_or_else(bad)?;
                if reversed && (1..=39).contains(&index) && !is_barred(index) {
                    return Err(Error::InvalidPattern(format!("F{index} is its own reversal")));
                }
                PatternId::Numbered { index, reversed }.validate()
            }
            _ => Err(bad()),
        }
    }
}

fn digits<T: FromStr>(s: &str) -> Option<T> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

/// `k` if `h` is isomorphic to `S_k`.
pub fn singleton_index(h: &OrderedHypergraph) -> Option<usize> {
    let c = h.canonicalize();
    let k = c.size();
    (k > 0 && c.edges().iter().enumerate().all(|(i, e)| e == &[i as u32 + 1])).then_some(k)
}

/// The canonical hypergraph named by `id`.
pub fn pattern_of(id: PatternId) -> Result<OrderedHypergraph> {
    if let PatternId::Numbered { index, reversed: true } = id {
        if (1..=39).contains(&index) && !is_barred(index) {
            return Err(Error::InvalidPattern(format!("F{index} is its own reversal")));
        }
    }
    match id.validate()? {
        PatternId::Singleton(k) => OrderedHypergraph::from_edges((1..=k as u32).map(|v| [v])),
        PatternId::Numbered { index, reversed } => {
            let base = parse_hypergraph(BASE[index as usize - 1])?;
            Ok(if reversed { base.reverse() } else { base })
        }
    }
}

/// Resolves a pattern argument: a catalog name (`S3`, `F30`, `F29r`) or a
/// hypergraph literal (`1,2|2,3`).
pub fn resolve_pattern(arg: &str) -> Result<OrderedHypergraph> {
    let t = arg.trim();
    if t.starts_with(['S', 's', 'F', 'f']) {
        pattern_of(t.parse()?)
    } else {
        parse_hypergraph(t)
    }
}

/// Exact extremal value from the closed forms, including the exceptional
/// small values. Reversed rows share the formulas of their base row.
pub fn ex_formula<T: Exact>(id: PatternId, n: usize, stat: Stat) -> Result<ExValue<T>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if let PatternId::Numbered { index, reversed: true } = id {
        if (1..=39).contains(&index) && !is_barred(index) {
            return Err(Error::InvalidPattern(format!("F{index} is its own reversal")));
        }
    }
    let index = match id.validate()? {
        PatternId::Singleton(1) => return Ok(ExValue::Undefined),
        PatternId::Singleton(k) => return ex_singleton(k, n, stat).map(ExValue::Defined),
        PatternId::Numbered { index, .. } => index,
    };
    if index == 1 {
        return Ok(ExValue::Undefined);
    }
    if n == 1 {
        return Ok(ExValue::Defined(T::one()));
    }
    let c = |x: i64| T::from_i64(x).expect("small constant");
    let nn = T::from_usize_exact(n);
    let lin = |a: i64, b: i64| c(a) * nn.clone() + c(b);
    let sq = nn.clone() * nn.clone();
    let quarter = sq.clone() / c(4);
    let quarter_next = (nn.clone() + c(1)) * (nn.clone() + c(1)) / c(4);
    use Stat::{Edges, Incidences};
    let v = match (index, stat) {
        (2, _) | (4, _) => nn,
        (3, Edges) => c(1),
        (3, Incidences) => nn,
        (5, Edges) => c(3) * nn / c(2),
        (5, Incidences) => lin(2, 0),
        (6 | 8 | 24, Edges) => nn,
        (6 | 8 | 24, Incidences) => lin(2, -1),
        (7, Edges) => c(if n == 2 { 3 } else { 2 }),
        (7, Incidences) if n == 2 => c(4),
        (7, Incidences) => lin(2, -1),
        (9 | 10 | 19..=23, Edges) => lin(2, -1),
        (9 | 10 | 19..=23, Incidences) => lin(3, -2),
        (11 | 31 | 35 | 36, Edges) => (sq + nn) / c(2),
        (11 | 31 | 35 | 36, Incidences) => sq,
        (12, Edges) if n == 2 => c(3),
        (12, Edges) => lin(2, 0),
        (12, Incidences) if n == 2 => c(4),
        (12, Incidences) => lin(3, 0),
        (13, Edges) => lin(2, -1),
        (13, Incidences) => c(7) * (nn - c(1)) / c(2) + c(1),
        (14..=16, Edges) => lin(1, 1),
        (14..=16, Incidences) => lin(3, -2),
        (17, Edges) => c(match n {
            2 => 3,
            3 => 7,
            _ => 4,
        }),
        (17, Incidences) if n == 3 => c(12),
        (17, Incidences) => lin(3, -2),
        (18, Edges) => lin(2, -1),
        (18, Incidences) => match n {
            2 => c(4),
            3 => c(8),
            4 => c(11),
            5 => c(15),
            _ => lin(4, -6),
        },
        (25..=28 | 33 | 34, Edges) => lin(4, -5),
        (25..=28 | 33 | 34, Incidences) => lin(8, -12),
        (29, Edges) => lin(2, -1),
        (29, Incidences) => lin(4, -4),
        (30, Edges) => quarter + nn,
        (30, Incidences) if n == 3 => c(8),
        (30, Incidences) => c(2) * quarter + nn,
        (32, Edges) => c(2) * quarter_next - c(1),
        (32, Incidences) => c(5) * quarter_next - lin(2, 2),
        (37 | 38, Edges) => sq - nn + c(1),
        (37 | 38, Incidences) => (c(5) * sq - c(9) * nn + c(6)) / c(2),
        (39, Edges) => (sq * nn.clone() + c(5) * nn) / c(6),
        (39, Incidences) => (sq.clone() * nn.clone() - sq + c(2) * nn) / c(2),
        _ => unreachable!("row {index} covered above"),
    };
    Ok(ExValue::Defined(v))
}

/// `ex_e(S_k, n)` and `ex_i(S_k, n)` for `k >= 2`.
pub fn ex_singleton<T: Exact>(k: usize, n: usize, stat: Stat) -> Result<T> {
    if k < 2 {
        return Err(Error::InvalidPattern(format!("S{k}: need k >= 2")));
    }
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let nn = T::from_usize_exact(n);
    Ok(match stat {
        Stat::Edges if n < k => T::pow2(n) - T::one(),
        Stat::Edges => T::pow2(k - 2),
        Stat::Incidences if n < k => nn * T::pow2(n - 1),
        // The middle branch exists only for k >= 5, where k <= 2^(k-3) + 1.
        Stat::Incidences if k >= 5 && nn <= T::pow2(k - 3) + T::one() => {
            nn + T::from_usize_exact(k - 2) * T::pow2(k - 3)
        }
        Stat::Incidences => T::from_usize_exact(k - 1) * nn - T::from_usize_exact(k - 2),
    })
}

/// Number of simple `S_k`-free hypergraphs of order `n` attaining the maximum.
pub fn extremal_count_singleton<T: Exact>(k: usize, n: usize, stat: Stat) -> Result<T> {
    if k < 2 {
        return Err(Error::InvalidPattern(format!("S{k}: need k >= 2")));
    }
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if n < k {
        return Ok(T::one());
    }
    let choose: T = binomial(n, k - 2);
    Ok(match stat {
        Stat::Edges => T::pow2(k - 2) * choose,
        Stat::Incidences => {
            let tie = k >= 5 && T::from_usize_exact(n) == T::pow2(k - 3) + T::one();
            if tie {
                T::from_usize_exact(2) * choose
            } else {
                choose
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(index: u8, n: usize, stat: Stat) -> i64 {
        ex_formula::<i64>(PatternId::numbered(index), n, stat)
            .unwrap()
            .defined()
            .unwrap()
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(
            pattern_of(PatternId::Singleton(3)).unwrap(),
            parse_hypergraph("1|2|3").unwrap()
        );
        assert_eq!(
            pattern_of(PatternId::numbered(30)).unwrap(),
            parse_hypergraph("1,2|2,3").unwrap()
        );
        assert_eq!(
            pattern_of(PatternId::reversed(29)).unwrap(),
            parse_hypergraph("1,3|2,3").unwrap()
        );
        assert_eq!(
            pattern_of(PatternId::numbered(12)).unwrap(),
            parse_hypergraph("1|1|1|1").unwrap()
        );
    }

    #[test]
    fn pattern_errors() {
        assert!(pattern_of(PatternId::Singleton(0)).is_err());
        assert!(pattern_of(PatternId::numbered(0)).is_err());
        assert!(pattern_of(PatternId::numbered(40)).is_err());
        assert!(pattern_of(PatternId::reversed(30)).is_err());
        assert!("F30r".parse::<PatternId>().is_err());
        assert!("G3".parse::<PatternId>().is_err());
        assert!("F".parse::<PatternId>().is_err());
        assert!("S".parse::<PatternId>().is_err());
    }

    #[test]
    fn names_roundtrip() {
        for id in PatternId::all() {
            assert_eq!(id.to_string().parse::<PatternId>().unwrap(), id);
        }
        assert_eq!("S3".parse::<PatternId>().unwrap(), PatternId::Singleton(3));
        assert_eq!("F29r".parse::<PatternId>().unwrap(), PatternId::reversed(29));
    }

    #[test]
    fn registry_has_55_distinct_classes() {
        let all = PatternId::all();
        assert_eq!(all.len(), 55);
        let mut hs: Vec<_> = all.iter().map(|&id| pattern_of(id).unwrap()).collect();
        assert!(hs.iter().all(|h| h.is_canonical() && h.weight() <= 4));
        hs.sort();
        hs.dedup();
        assert_eq!(hs.len(), 55);
    }

    #[test]
    fn bars_mark_exactly_the_non_self_reverse_rows() {
        for index in 1..=39u8 {
            let h = pattern_of(PatternId::numbered(index)).unwrap();
            assert_eq!(h.reverse() != h, is_barred(index), "F{index}");
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(f(30, 4, Stat::Edges), 8);
        assert_eq!(f(18, 5, Stat::Incidences), 15);
        assert_eq!(f(39, 3, Stat::Edges), 7);
        assert_eq!(f(7, 2, Stat::Edges), 3);
        assert_eq!(
            ex_formula::<i64>(PatternId::numbered(1), 5, Stat::Edges).unwrap(),
            ExValue::Undefined
        );
        assert_eq!(
            ex_formula::<i64>(PatternId::Singleton(1), 5, Stat::Edges).unwrap(),
            ExValue::Undefined
        );
        assert!(ex_formula::<i64>(PatternId::numbered(3), 0, Stat::Edges).is_err());
    }

    #[test]
    fn listed_exceptions() {
        for index in 2..=39 {
            assert_eq!(f(index, 1, Stat::Edges), 1);
            assert_eq!(f(index, 1, Stat::Incidences), 1);
        }
        assert_eq!(f(7, 2, Stat::Incidences), 4);
        assert_eq!(f(12, 2, Stat::Edges), 3);
        assert_eq!(f(12, 2, Stat::Incidences), 4);
        assert_eq!(f(17, 3, Stat::Incidences), 12);
        let f18: Vec<i64> = (1..=7).map(|n| f(18, n, Stat::Incidences)).collect();
        assert_eq!(f18, [1, 4, 8, 11, 15, 18, 22]);
        assert_eq!(f(30, 3, Stat::Incidences), 8);
        assert_eq!(f(37, 3, Stat::Incidences), 12);
    }

    #[test]
    fn reversal_rows_share_values() {
        for &index in &BARRED {
            for n in 1..=8 {
                for stat in [Stat::Edges, Stat::Incidences] {
                    assert_eq!(
                        ex_formula::<i64>(PatternId::reversed(index), n, stat).unwrap(),
                        ex_formula::<i64>(PatternId::numbered(index), n, stat).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(ex_singleton::<i64>(4, 3, Stat::Edges).unwrap(), 7);
        assert_eq!(ex_singleton::<i64>(4, 10, Stat::Edges).unwrap(), 4);
        assert_eq!(ex_singleton::<i64>(5, 5, Stat::Incidences).unwrap(), 17);
        assert_eq!(ex_singleton::<i64>(3, 5, Stat::Incidences).unwrap(), 9);
        assert!(ex_singleton::<i64>(1, 5, Stat::Edges).is_err());
        let huge: Count = ex_singleton(200, 150, Stat::Edges).unwrap();
        assert_eq!(huge, Count::from(2).pow(150) - 1);
    }

    #[test]
    fn singleton_count_examples() {
        assert_eq!(extremal_count_singleton::<i64>(4, 3, Stat::Incidences).unwrap(), 1);
        assert_eq!(extremal_count_singleton::<i64>(4, 6, Stat::Incidences).unwrap(), 15);
        assert_eq!(extremal_count_singleton::<i64>(3, 4, Stat::Edges).unwrap(), 8);
        assert_eq!(extremal_count_singleton::<i64>(5, 5, Stat::Incidences).unwrap(), 20);
        assert_eq!(extremal_count_singleton::<i64>(5, 6, Stat::Incidences).unwrap(), 20);
    }

    #[test]
    fn singleton_dips() {
        for k in 3..=12 {
            let at = |n| ex_singleton::<i64>(k, n, Stat::Edges).unwrap();
            assert!(at(k - 1) > at(k));
        }
        // fails at k = 3: ex_i(S_3, 2) = 4 < 5 = ex_i(S_3, 3)
        assert!(
            ex_singleton::<i64>(3, 2, Stat::Incidences).unwrap() < ex_singleton::<i64>(3, 3, Stat::Incidences).unwrap()
        );
        for k in 4..=8usize {
            let peak = ex_singleton::<i64>(k, k - 1, Stat::Incidences).unwrap();
            for n in k..=k.max(1 << (k - 2)) {
                assert!(
                    peak > ex_singleton::<i64>(k, n, Stat::Incidences).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn branches_agree_at_the_switch_point() {
        for k in 5..=20usize {
            let n = (1usize << (k - 3)) + 1;
            let middle = n as i64 + (k as i64 - 2) * (1i64 << (k - 3));
            let last = (k as i64 - 1) * n as i64 - (k as i64 - 2);
            assert_eq!(middle, last);
            assert_eq!(ex_singleton::<i64>(k, n, Stat::Incidences).unwrap(), last);
        }
    }

    #[test]
    fn rows_3_7_17_are_singleton_cases() {
        for (row, k) in [(3u8, 2usize), (7, 3), (17, 4)] {
            for n in 1..=10 {
                for stat in [Stat::Edges, Stat::Incidences] {
                    assert_eq!(
                        f(row, n, stat),
                        ex_singleton::<i64>(k, n, stat).unwrap(),
                        "F{row} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn identify_patterns() {
        assert_eq!(
            PatternId::identify(&parse_hypergraph("2,4|6,8").unwrap()),
            Some(PatternId::numbered(32))
        );
        assert_eq!(
            PatternId::identify(&parse_hypergraph("2,6|4,8").unwrap()),
            Some(PatternId::numbered(34))
        );
        assert_eq!(
            PatternId::identify(&parse_hypergraph("1|2|3|4|5").unwrap()),
            Some(PatternId::Singleton(5))
        );
        assert_eq!(PatternId::identify(&parse_hypergraph("1,6|2,5|3,4").unwrap()), None);
        assert_eq!(singleton_index(&parse_hypergraph("1|2|3").unwrap()), Some(3));
        assert_eq!(singleton_index(&parse_hypergraph("1|1").unwrap()), None);
    }

    #[test]
    fn resolve_names_and_literals() {
        assert_eq!(resolve_pattern("F30").unwrap(), parse_hypergraph("1,2|2,3").unwrap());
        assert_eq!(
            resolve_pattern("1,2|2,3").unwrap(),
            parse_hypergraph("1,2|2,3").unwrap()
        );
        assert_eq!(resolve_pattern("S2").unwrap(), parse_hypergraph("1|2").unwrap());
    }
}
