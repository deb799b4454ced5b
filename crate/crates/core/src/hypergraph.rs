//! Ordered hypergraphs: finite lists of nonempty vertex sets over the
//! positive integers, with the standard order on vertices as structure.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite multiset of nonempty vertex sets.
///
/// Each edge is stored as a strictly increasing vertex list. Edge order and
/// vertex labels are kept as given; [`canonicalize`](Self::canonicalize)
/// produces the unique representative of the isomorphism class, whose vertex
/// set is exactly `1..=order` and whose edges are sorted lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedHypergraph {
    edges: Vec<Vec<u32>>,
}

/// `(order, size, weight)` = `(v(H), e(H), i(H))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Stats {
    pub order: usize,
    pub size: usize,
    pub weight: usize,
}

impl OrderedHypergraph {
    /// The hypergraph with no edges.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a hypergraph from edge vertex lists. Vertices inside an edge may
    /// come in any order; repeated vertices in one edge collapse.
    pub fn from_edges<I, E>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = u32>,
    {
        let mut out = Vec::new();
        for edge in edges {
            let mut e: Vec<u32> = edge.into_iter().collect();
            if e.is_empty() {
                return Err(Error::EmptyEdge { pos: 0 });
            }
            if e.contains(&0) {
                return Err(Error::BadVertex { token: "0".into() });
            }
            e.sort_unstable();
            e.dedup();
            out.push(e);
        }
        Ok(Self { edges: out })
    }

    /// Builds a hypergraph on vertices `1..` from edge bitmasks, bit `i`
    /// standing for vertex `i + 1`.
    pub fn from_masks(masks: &[u64]) -> Self {
        let edges = masks
            .iter()
            .map(|&m| {
                debug_assert!(m != 0);
                (0..64).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect()
            })
            .collect();
        Self { edges }
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted union of all edges.
    pub fn vertices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.edges.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn order(&self) -> usize {
        self.vertices().len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn stats(&self) -> Stats {
        Stats {
            order: self.order(),
            size: self.size(),
            weight: self.weight(),
        }
    }

    /// Order-preserving relabeling onto `1..=order`, edges sorted.
    pub fn canonicalize(&self) -> Self {
        let verts = self.vertices();
        let mut edges: Vec<Vec<u32>> = self
            .edges
            .iter()
            .map(|e| {
                e.iter()
                    .map(|x| verts.binary_search(x).expect("vertex in union") as u32 + 1)
                    .collect()
            })
            .collect();
        edges.sort();
        Self { edges }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// True iff no two edge instances are equal as sets.
    pub fn is_simple(&self) -> bool {
        let mut e = self.edges.clone();
        e.sort();
        e.windows(2).all(|w| w[0] != w[1])
    }

    /// Keeps one edge from each family of equal edges; result is canonical.
    pub fn simplify(&self) -> Self {
        let mut c = self.canonicalize();
        c.edges.dedup();
        c
    }

    /// Image under `x -> N - x + 1` with `N` the largest vertex, canonicalized.
    pub fn reverse(&self) -> Self {
        let top = self.edges.iter().flatten().copied().max().unwrap_or(0);
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().rev().map(|&x| top - x + 1).collect())
            .collect();
        Self { edges }.canonicalize()
    }

    /// Removes vertex `a` from every edge, dropping edges that become empty.
    /// Multiplicities are kept, so the result need not be simple.
    pub fn delete_vertex(&self, a: u32) -> Result<Self> {
        if !self.edges.iter().any(|e| e.binary_search(&a).is_ok()) {
            return Err(Error::NotAVertex(a));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().copied().filter(|&x| x != a).collect::<Vec<_>>())
            .filter(|e| !e.is_empty())
            .collect();
        Ok(Self { edges }.canonicalize())
    }

    /// Removes the edge instance at `index` (no relabeling).
    pub fn delete_edge(&self, index: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Self { edges }
    }

    /// Edge cardinality histogram: entry `i` counts edges with `i + 1` vertices.
    pub fn cardinality_counts(&self) -> Vec<usize> {
        let top = self.edges.iter().map(Vec::len).max().unwrap_or(0);
        let mut counts = vec![0; top];
        for e in &self.edges {
            counts[e.len() - 1] += 1;
        }
        counts
    }

    /// Edge bitmasks (bit `v - 1` for vertex `v`); `None` if a label exceeds 64.
    pub fn to_masks(&self) -> Option<Vec<u64>> {
        self.edges
            .iter()
            .map(|e| {
                e.iter()
                    .try_fold(0u64, |m, &x| (1..=64).contains(&x).then(|| m | 1 << (x - 1)))
            })
            .collect()
    }
}

/// Parses the text form `edge ("|" edge)*`, `edge := int ("," int)*`,
/// returning the canonical form. Whitespace around tokens is ignored, and a
/// blank string is the empty hypergraph.
pub fn parse_hypergraph(text: &str) -> Result<OrderedHypergraph> {
    Parser::new(text).parse().map(|h| h.canonicalize())
}

/// Canonical text form, without whitespace.
pub fn format_hypergraph(h: &OrderedHypergraph) -> String {
    h.canonicalize().to_string()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<OrderedHypergraph> {
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(OrderedHypergraph::empty());
        }
        let mut edges = vec![self.edge()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'|') => {
                    self.pos += 1;
                    edges.push(self.edge()?);
                }
                Some(c) => {
                    return Err(Error::Syntax {
                        pos: self.pos,
                        msg: format!("expected '|' or ',' but found {:?}", c as char),
                    })
                }
            }
        }
        Ok(OrderedHypergraph { edges })
    }

    fn edge(&mut self) -> Result<Vec<u32>> {
        self.skip_ws();
        if matches!(self.peek(), None | Some(b'|')) {
            return Err(Error::EmptyEdge { pos: self.pos });
        }
        let mut e = vec![self.int()?];
        loop {
            self.skip_ws();
            if self.peek() != Some(b',') {
                break;
            }
            self.pos += 1;
            e.push(self.int()?);
        }
        e.sort_unstable();
        e.dedup();
        Ok(e)
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == b'|' || c == b',' || c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Syntax {
                pos: start,
                msg: "expected a vertex".into(),
            });
        }
        let token = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        let bytes = token.as_bytes();
        if !bytes.iter().all(u8::is_ascii_digit) || bytes[0] == b'0' {
            return Err(Error::BadVertex { token });
        }
        token.parse().map_err(|_| Error::BadVertex { token })
    }
}

impl FromStr for OrderedHypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hypergraph(s)
    }
}

/// Prints the edges as stored, `|`-separated; canonicalize first for the
/// canonical text form.
impl fmt::Display for OrderedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in e.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> OrderedHypergraph {
        parse_hypergraph(s).unwrap()
    }

    fn raw(edges: &[&[u32]]) -> OrderedHypergraph {
        OrderedHypergraph::from_edges(edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(h("1,3|2,4").edges(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(h("2,5|3").to_string(), "1,3|2");
        assert_eq!(h("1|1").edges(), &[vec![1], vec![1]]);
        assert_eq!(h("  4 , 2 |\t1 ").to_string(), "1|2,3");
        assert!(h("").is_empty());
        assert!(h("   ").is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_hypergraph("1||2"), Err(Error::EmptyEdge { .. })));
        assert!(matches!(parse_hypergraph("|1"), Err(Error::EmptyEdge { .. })));
        assert!(matches!(parse_hypergraph("1|"), Err(Error::EmptyEdge { .. })));
        assert!(matches!(parse_hypergraph("1,"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_hypergraph("1 2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_hypergraph("0"), Err(Error::BadVertex { .. })));
        assert!(matches!(parse_hypergraph("01"), Err(Error::BadVertex { .. })));
        assert!(matches!(parse_hypergraph("-1"), Err(Error::BadVertex { .. })));
        assert!(matches!(parse_hypergraph("1,a"), Err(Error::BadVertex { .. })));
        assert!(matches!(parse_hypergraph("99999999999"), Err(Error::BadVertex { .. })));
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_hypergraph(&raw(&[&[1, 3], &[2, 4]])), "1,3|2,4");
        assert_eq!(format_hypergraph(&raw(&[&[1], &[1]])), "1|1");
        assert_eq!(format_hypergraph(&raw(&[&[2, 3], &[1]])), "1|2,3");
        assert_eq!(format_hypergraph(&OrderedHypergraph::empty()), "");
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(raw(&[&[5, 9], &[7]]).canonicalize(), raw(&[&[1, 3], &[2]]));
        assert_eq!(
            raw(&[&[1, 3], &[2, 4]]).canonicalize(),
            raw(&[&[2, 6], &[4, 8]]).canonicalize()
        );
        assert_ne!(h("1,2|1,3"), h("1,2|2,3"));
        // shorter edge first on a prefix tie
        assert_eq!(h("1,2|1").to_string(), "1|1,2");
    }

    #[test]
    fn stats_examples() {
        let s = h("1,3|2,4").stats();
        assert_eq!((s.order, s.size, s.weight), (4, 2, 4));
        let s = h("1|1").stats();
        assert_eq!((s.order, s.size, s.weight), (1, 2, 2));
        let s = h("1,2,3,4").stats();
        assert_eq!((s.order, s.size, s.weight), (4, 1, 4));
    }

    #[test]
    fn simple_and_simplify() {
        let x = h("1|1|2");
        assert!(!x.is_simple());
        assert_eq!(x.simplify(), h("1|2"));
        let y = h("1,2|1,3");
        assert!(y.is_simple());
        assert_eq!(y.simplify(), y);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(h("1,2|1,3").reverse(), h("1,3|2,3"));
        assert_eq!(h("1,3|2,4").reverse(), h("1,3|2,4"));
        assert_eq!(h("1").reverse(), h("1"));
        assert_eq!(raw(&[&[4, 9]]).reverse(), h("1,2"));
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(h("1|1,2").delete_vertex(1).unwrap(), h("1"));
        assert_eq!(h("1,2|2,3").delete_vertex(2).unwrap(), h("1|2"));
        let d = h("1,2|2").delete_vertex(1).unwrap();
        assert_eq!(d, h("1|1"));
        assert!(!d.is_simple());
        assert_eq!(h("1,2").delete_vertex(3), Err(Error::NotAVertex(3)));
    }

    #[test]
    fn masks_roundtrip() {
        let x = h("1,3|2|2,3,4");
        let m = x.to_masks().unwrap();
        assert_eq!(OrderedHypergraph::from_masks(&m), x);
        assert_eq!(raw(&[&[65]]).to_masks(), None);
    }
}
