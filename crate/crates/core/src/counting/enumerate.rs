//! Direct generation of every nonisomorphic hypergraph of a given weight.
//!
//! Canonical forms are built edge by edge: for each order `v`, the edges are
//! drawn as a nondecreasing (strictly increasing when simple) sequence from
//! the nonempty subsets of `[v]` in canonical order, and a hypergraph is kept
//! only if it covers all of `[v]`. Each canonical form comes out exactly once.

use crate::counting::Variant;
use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;

pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// Nonempty subsets of `[v]` as bitmasks, in canonical edge order.
fn canonical_subsets(v: usize) -> Vec<u64> {
    let mut subsets: Vec<(Vec<u32>, u64)> = (1..1u64 << v)
        .map(|m| ((0..v as u32).filter(|b| m >> b & 1 == 1).collect(), m))
        .collect();
    subsets.sort();
    subsets.into_iter().map(|(_, m)| m).collect()
}

/// Calls `visit` on every canonical hypergraph of weight `n` (of the
/// variant), ordered by order and then by edge sequence.
pub fn for_each_weight<F: FnMut(&OrderedHypergraph)>(n: usize, variant: Variant, mut visit: F) {
    for v in 1..=n {
        let cands = canonical_subsets(v);
        let full = (1u64 << v) - 1;
        let mut stack = Vec::new();
        extend(&cands, full, variant, 0, n, 0, &mut stack, &mut visit);
    }
}

#[allow(clippy::too_many_arguments)]
fn extend<F: FnMut(&OrderedHypergraph)>(
    cands: &[u64],
    full: u64,
    variant: Variant,
    start: usize,
    remaining: usize,
    covered: u64,
    stack: &mut Vec<u64>,
    visit: &mut F,
) {
    if remaining == 0 {
        if covered == full {
            visit(&OrderedHypergraph::from_masks(stack));
        }
        return;
    }
    // every uncovered vertex still needs an incidence
    if ((full & !covered).count_ones() as usize) > remaining {
        return;
    }
    for (i, &e) in cands.iter().enumerate().skip(start) {
        let w = e.count_ones() as usize;
        if w > remaining {
            continue;
        }
        stack.push(e);
        let next = match variant {
            Variant::Simple => i + 1,
            Variant::Multi => i,
        };
        extend(cands, full, variant, next, remaining - w, covered | e, stack, visit);
        stack.pop();
    }
}

/// All nonisomorphic hypergraphs of weight `n`, up to the default cap.
pub fn enumerate_weight(n: usize, variant: Variant) -> Result<Vec<OrderedHypergraph>> {
    enumerate_weight_capped(n, variant, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_weight_capped(n: usize, variant: Variant, cap: usize) -> Result<Vec<OrderedHypergraph>> {
    if n > cap || n > 63 {
        return Err(Error::WeightTooLarge { n, cap: cap.min(63) });
    }
    let mut out = Vec::new();
    for_each_weight(n, variant, |h| out.push(h.clone()));
    Ok(out)
}
