//! Exact extremal values by exhaustive search.
//!
//! The search walks subsets of the `2^n - 1` nonempty subsets of `[n]`
//! (the candidate edges, in canonical order) with an include/exclude
//! recursion. Alongside the chosen edges it keeps the set of candidates that
//! can still be added on their own without creating a copy of the pattern;
//! since freeness is closed under taking subsets, later choices only ever
//! shrink that set. Branches are cut when
//!
//! * some vertex of `[n]` can no longer be covered,
//! * the current value plus the value of every compatible candidate cannot
//!   beat the best hypergraph found so far.
//!
//! Adding an edge only requires looking for pattern copies through that edge.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::catalog::{ex_formula, pattern_of, singleton_index, ExValue, PatternId, Stat};
use crate::containment::Matcher;
use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;
use crate::Count;

/// Hard limit: candidate edges are tracked in a 64-bit set.
pub const MAX_SEARCH_ORDER: usize = 6;

/// Limits for one search. Exceeding a limit is an error, never a wrong value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_order: usize,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_order: MAX_SEARCH_ORDER,
            node_limit: None,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub value: Count,
    pub witness_count: Option<Count>,
    /// Canonical extremal hypergraphs, sorted, when requested.
    pub witnesses: Option<Vec<OrderedHypergraph>>,
    pub nodes_explored: u64,
}

enum Mode {
    Optimize,
    Collect { target: u64, found: Vec<Vec<u64>> },
}

struct Search<'a> {
    matcher: &'a Matcher,
    /// Candidate edges as vertex masks, bit `i` for vertex `i + 1`.
    cands: Vec<u64>,
    gains: Vec<u64>,
    full: u64,
    budget: SearchBudget,
    started: Instant,
    nodes: u64,
    best: Option<u64>,
    mode: Mode,
    chosen: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(matcher: &'a Matcher, n: usize, stat: Stat, budget: SearchBudget, mode: Mode) -> Self {
        let mut subsets: Vec<(Vec<u32>, u64)> = (1..1u64 << n)
            .map(|m| ((0..n as u32).filter(|b| m >> b & 1 == 1).collect(), m))
            .collect();
        subsets.sort();
        let cands: Vec<u64> = subsets.into_iter().map(|(_, m)| m).collect();
        let gains = cands
            .iter()
            .map(|m| match stat {
                Stat::Edges => 1,
                Stat::Incidences => u64::from(m.count_ones()),
            })
            .collect();
        Self {
            matcher,
            cands,
            gains,
            full: (1u64 << n) - 1,
            budget,
            started: Instant::now(),
            nodes: 0,
            best: None,
            mode,
            chosen: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<()> {
        let mut open = 0u64;
        for (i, &c) in self.cands.iter().enumerate() {
            if !self.matcher.embeds(&[c]) {
                open |= 1 << i;
            }
        }
        self.dfs(0, 0, open)
    }

    fn over_budget(&self) -> bool {
        if self.budget.node_limit.is_some_and(|lim| self.nodes > lim) {
            return true;
        }
        self.nodes.is_multiple_of(4096) && self.budget.time_limit.is_some_and(|lim| self.started.elapsed() > lim)
    }

    fn dfs(&mut self, value: u64, covered: u64, open: u64) -> Result<()> {
        self.nodes += 1;
        if self.over_budget() {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes,
                lower_bound: self.best,
            });
        }
        if open == 0 {
            if covered == self.full {
                match &mut self.mode {
                    Mode::Optimize => {
                        if self.best.is_none_or(|b| value > b) {
                            self.best = Some(value);
                        }
                    }
                    Mode::Collect { target, found } => {
                        if value == *target {
                            found.push(self.chosen.clone());
                            self.best = Some(value);
                        }
                    }
                }
            }
            return Ok(());
        }
        let mut reach = covered;
        let mut bound = value;
        let mut bits = open;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            reach |= self.cands[i];
            bound += self.gains[i];
            bits &= bits - 1;
        }
        if reach != self.full {
            return Ok(());
        }
        match self.mode {
            Mode::Optimize if self.best.is_some_and(|b| bound <= b) => return Ok(()),
            Mode::Collect { target, .. } if bound < target => return Ok(()),
            _ => {}
        }

        let c = open.trailing_zeros() as usize;
        let rest = open & !(1u64 << c);

        // include c, keeping only candidates that stay compatible with it
        self.chosen.push(self.cands[c]);
        let mut next = 0u64;
        let mut bits = rest;
        while bits != 0 {
            let d = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.chosen.push(self.cands[d]);
            let last = self.chosen.len() - 1;
            if !self.matcher.embeds_using(&self.chosen, last) {
                next |= 1 << d;
            }
            self.chosen.pop();
        }
        let included = self.dfs(value + self.gains[c], covered | self.cands[c], next);
        self.chosen.pop();
        included?;

        self.dfs(value, covered, rest)
    }
}

fn check_inputs(pattern: &OrderedHypergraph, n: usize, budget: &SearchBudget) -> Result<()> {
    if pattern.is_empty() {
        return Err(Error::Invalid(
            "the empty pattern is contained in every hypergraph".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let cap = budget.max_order.min(MAX_SEARCH_ORDER);
    if n > cap {
        return Err(Error::OrderTooLarge { n, cap });
    }
    Ok(())
}

/// Maximum size or weight of a simple `pattern`-free hypergraph on exactly `[n]`.
pub fn ex_brute(pattern: &OrderedHypergraph, n: usize, stat: Stat, budget: SearchBudget) -> Result<ExtremalReport> {
    check_inputs(pattern, n, &budget)?;
    let matcher = Matcher::new(pattern);
    let mut s = Search::new(&matcher, n, stat, budget, Mode::Optimize);
    s.run()?;
    let value = s.best.ok_or(Error::Undefined)?;
    Ok(ExtremalReport {
        value: Count::from(value),
        witness_count: None,
        witnesses: None,
        nodes_explored: s.nodes,
    })
}

/// Like [`ex_brute`], also listing every extremal hypergraph.
pub fn extremal_witnesses(
    pattern: &OrderedHypergraph,
    n: usize,
    stat: Stat,
    budget: SearchBudget,
) -> Result<ExtremalReport> {
    check_inputs(pattern, n, &budget)?;
    let matcher = Matcher::new(pattern);
    let mut first = Search::new(&matcher, n, stat, budget, Mode::Optimize);
    first.run()?;
    let target = first.best.ok_or(Error::Undefined)?;
    // Bound pruning in the first pass may skip co-optimal branches, so
    // collect in a second pass that only cuts strictly worse ones.
    let mut second = Search::new(
        &matcher,
        n,
        stat,
        budget,
        Mode::Collect {
            target,
            found: Vec::new(),
        },
    );
    second.nodes = first.nodes;
    second.run()?;
    let found = match second.mode {
        Mode::Collect { found, .. } => found,
        Mode::Optimize => unreachable!(),
    };
    let mut witnesses: Vec<OrderedHypergraph> = found
        .iter()
        .map(|masks| OrderedHypergraph::from_masks(masks).canonicalize())
        .collect();
    witnesses.sort();
    Ok(ExtremalReport {
        value: Count::from(target),
        witness_count: Some(Count::from(witnesses.len())),
        witnesses: Some(witnesses),
        nodes_explored: second.nodes,
    })
}

/// Whether `ex_e(pattern, n) < ex_e(pattern, n + 1)` for all `1 <= n < n_max`.
/// Singleton patterns are rejected: they violate the hypothesis.
pub fn check_monotonicity(pattern: &OrderedHypergraph, n_max: usize, budget: SearchBudget) -> Result<bool> {
    if let Some(k) = singleton_index(pattern) {
        return Err(Error::SingletonPattern(k));
    }
    if n_max < 2 {
        return Err(Error::Invalid("n_max must be at least 2".into()));
    }
    let values = (1..=n_max)
        .map(|n| ex_brute(pattern, n, Stat::Edges, budget).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.windows(2).all(|w| w[0] < w[1]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellOutcome {
    Match(ExValue),
    Mismatch { formula: ExValue, brute: ExValue },
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub id: PatternId,
    pub n: usize,
    pub stat: Stat,
    pub outcome: CellOutcome,
}

#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub cells: Vec<TableCell>,
}

impl TableReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &TableCell> {
        self.cells
            .iter()
            .filter(|c| matches!(c.outcome, CellOutcome::Mismatch { .. }))
    }

    pub fn skipped(&self) -> impl Iterator<Item = &TableCell> {
        self.cells
            .iter()
            .filter(|c| matches!(c.outcome, CellOutcome::Skipped(_)))
    }

    pub fn matched(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| matches!(c.outcome, CellOutcome::Match(_)))
            .count()
    }

    pub fn all_match(&self) -> bool {
        self.matched() == self.cells.len()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            let what = match &c.outcome {
                CellOutcome::Match(v) => format!("ok {v}"),
                CellOutcome::Mismatch { formula, brute } => format!("MISMATCH formula={formula} brute={brute}"),
                CellOutcome::Skipped(why) => format!("skipped ({why})"),
            };
            writeln!(f, "{} n={} {:?}: {what}", c.id, c.n, c.stat)?;
        }
        write!(
            f,
            "{} cells: {} match, {} mismatch, {} skipped",
            self.cells.len(),
            self.matched(),
            self.mismatches().count(),
            self.skipped().count()
        )
    }
}

/// Compares the search against the closed forms on one catalog cell.
pub fn verify_cell(id: PatternId, n: usize, stat: Stat, budget: SearchBudget) -> TableCell {
    let outcome = (|| {
        let formula = ex_formula::<Count>(id, n, stat)?;
        let pattern = pattern_of(id)?;
        let brute = match ex_brute(&pattern, n, stat, budget) {
            Ok(r) => ExValue::Defined(r.value),
            Err(Error::Undefined) => ExValue::Undefined,
            Err(e) => return Ok(CellOutcome::Skipped(e.to_string())),
        };
        Ok::<_, Error>(if brute == formula {
            CellOutcome::Match(brute)
        } else {
            CellOutcome::Mismatch { formula, brute }
        })
    })()
    .unwrap_or_else(|e| CellOutcome::Skipped(e.to_string()));
    TableCell { id, n, stat, outcome }
}

/// Every catalog pattern against every `1 <= n <= n_max`, cells in parallel.
pub fn verify_table(n_max: usize, stat: Stat, budget: SearchBudget) -> TableReport {
    let jobs: Vec<(PatternId, usize)> = PatternId::all()
        .into_iter()
        .flat_map(|id| (1..=n_max).map(move |n| (id, n)))
        .collect();
    let cells = jobs
        .into_par_iter()
        .map(|(id, n)| verify_cell(id, n, stat, budget))
        .collect();
    TableReport { cells }
}
