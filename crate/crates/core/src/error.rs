use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("empty edge at byte {pos}")]
    EmptyEdge { pos: usize },
    #[error("invalid vertex token {token:?}: vertices are positive integers")]
    BadVertex { token: String },
    #[error("{0} is not a vertex of the hypergraph")]
    NotAVertex(u32),
    #[error("invalid pattern id: {0}")]
    InvalidPattern(String),
    #[error("invalid edge type: {0}")]
    InvalidEdgeType(String),
    #[error("extremal function undefined: every nonempty hypergraph contains the pattern")]
    Undefined,
    #[error("pattern is isomorphic to a singleton pattern S_{0}")]
    SingletonPattern(usize),
    #[error("order {n} exceeds the search cap of {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("weight {n} exceeds the enumeration cap of {cap}")]
    WeightTooLarge { n: usize, cap: usize },
    #[error("search budget exhausted after {nodes} nodes (best lower bound {lower_bound:?})")]
    BudgetExceeded { nodes: u64, lower_bound: Option<u64> },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
