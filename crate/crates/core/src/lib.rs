//! Ordered hypergraphs: containment of ordered patterns, exact extremal
//! functions for small forbidden patterns, and exact enumeration of
//! hypergraphs by order, weight and edge type.
//!
//! The counting code is generic over an exact integer scalar (see
//! [`scalar::Exact`]); [`Count`] and [`Ratio`] are the arbitrary-precision
//! instantiations used throughout the CLI and the tests.

pub mod catalog;
pub mod cli;
pub mod containment;
pub mod counting;
pub mod dobinski;
pub mod error;
pub mod extremal;
pub mod hypergraph;
pub mod scalar;

pub use catalog::{ExValue, PatternId, Stat};
pub use containment::{contains, contains_witness, Embedding, Matcher};
pub use counting::{EdgeType, Variant};
pub use error::{Error, Result};
pub use hypergraph::{format_hypergraph, parse_hypergraph, OrderedHypergraph, Stats};
pub use scalar::Exact;

/// Arbitrary-precision count.
pub type Count = num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms.
pub type Ratio = num_rational::BigRational;
/// Fixed-width count; exact while values stay below `2^127`.
pub type WideCount = i128;
/// Fixed-width rational over [`WideCount`].
pub type WideRatio = num_rational::Ratio<i128>;
