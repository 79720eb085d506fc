//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense integers `0..n-1` and every adjacency row fits in one
//! machine word, so neighborhood unions, set covers and connectivity checks
//! are a handful of bit operations.

use crate::error::{Error, Result};

/// A set of vertices of a fixed ambient graph, stored as a 64-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// The `k` smallest members, as a set. Panics if fewer than `k` members.
    pub fn take_smallest(self, k: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        let mut it = self.iter();
        for _ in 0..k {
            out.insert(it.next().expect("take_smallest: set too small"));
        }
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Immutable simple undirected graph. Adjacency is one `u64` row per vertex;
/// rows are kept symmetric and loop-free by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Largest supported order; one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::OrderLimit(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        if u == v {
            return Err(Error::Param(format!("loop at vertex {u} rejected")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Copy of `self` with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Number of vertices, |G|.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, e(G).
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// N(v) as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency row of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as ordered pairs `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            let mut upper = self.adj[u] & !VertexSet::full(u + 1).bits();
            while upper != 0 {
                let v = upper.trailing_zeros() as usize;
                upper &= upper - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// N(S): neighbors of members of `s`, excluding `s` itself.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.bits())
    }

    /// S ∪ N(S).
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighborhood(s).union(s)
    }

    /// Edge set [S,T] nonempty?
    pub fn sets_touch(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().any(|v| self.adj[v] & t.bits() != 0)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Is the subgraph induced by `within` connected? Empty sets count as
    /// connected (vacuously), matching the cut-search convention in `kappa`.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        let mask = within.bits();
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & mask == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set())
    }

    /// G[S], re-indexed to `0..|S|` in ascending original order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(verts.len()).expect("induced order <= original");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// G − S.
    pub fn removing(&self, s: VertexSet) -> Graph {
        self.induced(self.vertex_set().difference(s))
    }

    /// Join G ∨ H: disjoint union plus all cross edges. Vertices of `self`
    /// keep their indices, vertices of `other` are shifted by `|self|`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Disjoint union G + H, block-diagonal adjacency.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::OrderLimit(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Consistency check used by tests: symmetry, no loops, degree sum.
    pub fn check_invariants(&self) -> Result<()> {
        for u in 0..self.n {
            if self.adj[u] >> u & 1 == 1 {
                return Err(Error::Param(format!("self-loop at {u}")));
            }
            if self.adj[u] & !self.vertex_set().bits() != 0 {
                return Err(Error::Param(format!("row {u} has out-of-range bits")));
            }
            for v in self.neighbors(u).iter() {
                if !self.has_edge(v, u) {
                    return Err(Error::Param(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(())
    }
}
