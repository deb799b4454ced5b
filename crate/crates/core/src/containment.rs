//! Ordered containment `F ≺ H`: an increasing vertex injection together with
//! an injective assignment of pattern edges to host edges such that every
//! pattern edge lands inside its assigned host edge.
//!
//! The search assigns pattern edges in decreasing cardinality order and
//! extends the partial vertex map inside each chosen host edge, keeping it
//! strictly increasing. Identical pattern edges are assigned to increasing
//! host edge indices, which removes their permutations from the search.

use crate::hypergraph::OrderedHypergraph;

/// Host edge representation the matcher can walk.
pub trait HostEdge {
    fn card(&self) -> usize;
    fn has(&self, v: u32) -> bool;
    /// Calls `f` on every vertex `v` with `lo <= v < hi`, ascending, stopping
    /// at the first call that returns `true`. Returns whether one did.
    fn any_between<F: FnMut(u32) -> bool>(&self, lo: u32, hi: u32, f: F) -> bool;
}

/// Bit `v` stands for vertex `v`.
impl HostEdge for u64 {
    #[inline]
    fn card(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn has(&self, v: u32) -> bool {
        v < 64 && self >> v & 1 == 1
    }

    #[inline]
    fn any_between<F: FnMut(u32) -> bool>(&self, lo: u32, hi: u32, mut f: F) -> bool {
        if lo >= 64 || lo >= hi {
            return false;
        }
        let mut m = self >> lo << lo;
        if hi < 64 {
            m &= (1u64 << hi) - 1;
        }
        while m != 0 {
            let v = m.trailing_zeros();
            if f(v) {
                return true;
            }
            m &= m - 1;
        }
        false
    }
}

/// Sorted vertex list.
impl HostEdge for Vec<u32> {
    fn card(&self) -> usize {
        self.len()
    }

    fn has(&self, v: u32) -> bool {
        self.binary_search(&v).is_ok()
    }

    fn any_between<F: FnMut(u32) -> bool>(&self, lo: u32, hi: u32, mut f: F) -> bool {
        let start = self.partition_point(|&x| x < lo);
        self[start..].iter().take_while(|&&x| x < hi).any(|&x| f(x))
    }
}

/// A witness for `pattern ≺ host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `(pattern vertex, host vertex)` pairs, ascending in both coordinates.
    pub vertex_map: Vec<(u32, u32)>,
    /// Host edge index assigned to each pattern edge instance, by pattern edge index.
    pub edge_assignment: Vec<usize>,
}

impl Embedding {
    /// Checks the witness conditions directly.
    pub fn is_valid(&self, pattern: &OrderedHypergraph, host: &OrderedHypergraph) -> bool {
        let increasing = self.vertex_map.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        let mut seen = self.edge_assignment.clone();
        seen.sort_unstable();
        seen.dedup();
        let injective = seen.len() == self.edge_assignment.len();
        let image = |x: u32| self.vertex_map.iter().find(|(p, _)| *p == x).map(|(_, h)| *h);
        increasing
            && injective
            && self.edge_assignment.len() == pattern.size()
            && pattern
                .edges()
                .iter()
                .zip(&self.edge_assignment)
                .all(|(pe, &k)| k < host.size() && pe.iter().all(|&x| image(x).is_some_and(|y| host.edges()[k].has(y))))
    }
}

/// One order in which to assign pattern edges.
#[derive(Clone, Debug)]
struct Plan {
    seq: Vec<usize>,
    /// `sym[pos]`: the edge at `pos` equals the one at `pos - 1` and must take
    /// a larger host index.
    sym: Vec<bool>,
    /// The edge at position 0 is pinned to a required host edge.
    pinned: bool,
}

/// A pattern preprocessed for repeated containment queries.
#[derive(Clone, Debug)]
pub struct Matcher {
    /// Sorted pattern vertex labels; index `i` is pattern vertex `i` internally.
    labels: Vec<u32>,
    /// Pattern edges over internal vertex indices, in the pattern's own order.
    edges: Vec<Vec<u32>>,
    plan: Plan,
    /// One plan per distinct edge shape, pinning that shape first.
    pinned_plans: Vec<Plan>,
}

struct State {
    phi: Vec<Option<u32>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    pinned_host: usize,
}

impl Matcher {
    pub fn new(pattern: &OrderedHypergraph) -> Self {
        let labels = pattern.vertices();
        let edges: Vec<Vec<u32>> = pattern
            .edges()
            .iter()
            .map(|e| e.iter().map(|x| labels.binary_search(x).unwrap() as u32).collect())
            .collect();
        let mut seq: Vec<usize> = (0..edges.len()).collect();
        seq.sort_by(|&a, &b| {
            edges[b]
                .len()
                .cmp(&edges[a].len())
                .then_with(|| edges[a].cmp(&edges[b]))
        });
        let plan = Self::make_plan(&edges, seq.clone(), false);
        let mut pinned_plans = Vec::new();
        for (pos, &j) in seq.iter().enumerate() {
            if pos > 0 && edges[seq[pos - 1]] == edges[j] {
                continue;
            }
            let mut s = vec![j];
            s.extend(seq.iter().copied().filter(|&x| x != j));
            pinned_plans.push(Self::make_plan(&edges, s, true));
        }
        Self {
            labels,
            edges,
            plan,
            pinned_plans,
        }
    }

    fn make_plan(edges: &[Vec<u32>], seq: Vec<usize>, pinned: bool) -> Plan {
        let first_free = usize::from(pinned);
        let sym = (0..seq.len())
            .map(|pos| pos > first_free && edges[seq[pos]] == edges[seq[pos - 1]])
            .collect();
        Plan { seq, sym, pinned }
    }

    pub fn pattern_order(&self) -> usize {
        self.labels.len()
    }

    pub fn pattern_size(&self) -> usize {
        self.edges.len()
    }

    /// Whether the pattern embeds into the host edges.
    pub fn embeds<E: HostEdge>(&self, host: &[E]) -> bool {
        self.find(host).is_some()
    }

    /// Whether the pattern has an embedding that uses host edge `required`.
    pub fn embeds_using<E: HostEdge>(&self, host: &[E], required: usize) -> bool {
        self.pinned_plans.iter().any(|plan| {
            let mut st = self.state(host.len());
            st.pinned_host = required;
            self.place(plan, 0, host, &mut st)
        })
    }

    /// First embedding in search order, in terms of the pattern's own labels
    /// and the host's own vertex values and edge indices.
    pub fn find<E: HostEdge>(&self, host: &[E]) -> Option<Embedding> {
        let mut st = self.state(host.len());
        if !self.place(&self.plan, 0, host, &mut st) {
            return None;
        }
        let vertex_map = self
            .labels
            .iter()
            .zip(&st.phi)
            .map(|(&p, h)| (p, h.expect("every pattern vertex lies in an edge")))
            .collect();
        Some(Embedding {
            vertex_map,
            edge_assignment: st.assigned,
        })
    }

    fn state(&self, host_len: usize) -> State {
        State {
            phi: vec![None; self.labels.len()],
            used: vec![false; host_len],
            assigned: vec![usize::MAX; self.edges.len()],
            pinned_host: usize::MAX,
        }
    }

    fn place<E: HostEdge>(&self, plan: &Plan, pos: usize, host: &[E], st: &mut State) -> bool {
        if pos == plan.seq.len() {
            return true;
        }
        let j = plan.seq[pos];
        let need = self.edges[j].len();
        if plan.pinned && pos == 0 {
            let k = st.pinned_host;
            return k < host.len() && host[k].card() >= need && self.try_edge(plan, pos, k, host, st);
        }
        let start = if plan.sym[pos] {
            st.assigned[plan.seq[pos - 1]] + 1
        } else {
            0
        };
        for k in start..host.len() {
            if st.used[k] || host[k].card() < need {
                continue;
            }
            if self.try_edge(plan, pos, k, host, st) {
                return true;
            }
        }
        false
    }

    fn try_edge<E: HostEdge>(&self, plan: &Plan, pos: usize, k: usize, host: &[E], st: &mut State) -> bool {
        let j = plan.seq[pos];
        st.used[k] = true;
        st.assigned[j] = k;
        if self.map_vertices(plan, pos, 0, k, host, st) {
            return true;
        }
        st.used[k] = false;
        st.assigned[j] = usize::MAX;
        false
    }

    fn map_vertices<E: HostEdge>(
        &self,
        plan: &Plan,
        pos: usize,
        t: usize,
        k: usize,
        host: &[E],
        st: &mut State,
    ) -> bool {
        let pe = &self.edges[plan.seq[pos]];
        if t == pe.len() {
            return self.place(plan, pos + 1, host, st);
        }
        let u = pe[t] as usize;
        if let Some(h) = st.phi[u] {
            return host[k].has(h) && self.map_vertices(plan, pos, t + 1, k, host, st);
        }
        let lo = st.phi[..u].iter().rev().find_map(|x| *x).map_or(0, |h| h + 1);
        let hi = st.phi[u + 1..].iter().find_map(|x| *x).unwrap_or(u32::MAX);
        let found = host[k].any_between(lo, hi, |h| {
            st.phi[u] = Some(h);
            self.map_vertices(plan, pos, t + 1, k, host, st)
        });
        if !found {
            st.phi[u] = None;
        }
        found
    }
}

/// `pattern ≺ host`. The empty pattern is contained in every hypergraph.
pub fn contains(pattern: &OrderedHypergraph, host: &OrderedHypergraph) -> bool {
    Matcher::new(pattern).embeds(host.edges())
}

/// Like [`contains`], returning the first embedding found.
pub fn contains_witness(pattern: &OrderedHypergraph, host: &OrderedHypergraph) -> Option<Embedding> {
    Matcher::new(pattern).find(host.edges())
}
