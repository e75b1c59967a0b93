//! Small simple undirected graphs on at most 64 vertices.
//!
//! The vertex cap keeps every adjacency row in a single `u64`, so set
//! operations on neighborhoods are word operations. Values are immutable
//! after construction; every operation here is pure.

use crate::{Error, Result};

/// Hard cap on the vertex count: adjacency rows are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order; panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "self-loop ({a},{a})");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Basic structural counts of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub isolate_count: usize,
}

/// A two-coloring of the vertices witnessing bipartiteness.
///
/// The lowest vertex of each connected component is on the `left` side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    pub left: u64,
    pub right: u64,
}

impl Bipartition {
    /// Side mask containing vertex `v`.
    pub fn side_of(&self, v: usize) -> u64 {
        if self.left >> v & 1 == 1 {
            self.left
        } else {
            self.right
        }
    }
}

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bit positions of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An immutable simple undirected graph on `0..n` with `n <= 64`.
///
/// `adj[v]` is the neighbor bitmask of `v`. Equality and hashing are on the
/// labeled graph; isomorphism-level identity goes through
/// [`Graph::canonical_code`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    fn with_capacity(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCapExceeded(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// idempotent; a self-loop or an endpoint `>= n` is an error.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::with_capacity(n)?;
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { index: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { index: b, n });
            }
            if a == b {
                return Err(Error::InvalidParams(format!("self-loop ({a},{b})")));
            }
            g.add_edge_mut(a, b);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        let n = rows.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(rows.iter().enumerate().all(|(v, &row)| {
            row & !low_bits(n) == 0 && row >> v & 1 == 0
        }));
        Graph { n, adj: rows }
    }

    /// The edgeless graph `nK1`.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::with_capacity(n)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::with_capacity(n)?;
        for v in 0..n {
            g.adj[v] = low_bits(n) & !(1 << v);
        }
        Ok(g)
    }

    /// The complete bipartite graph `K_{a,b}`, first side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let n = a.checked_add(b).ok_or(Error::VertexCapExceeded(usize::MAX))?;
        let mut g = Graph::with_capacity(n)?;
        let left = low_bits(a);
        let right = low_bits(n) & !left;
        for v in 0..a {
            g.adj[v] = right;
        }
        for v in a..n {
            g.adj[v] = left;
        }
        Ok(g)
    }

    /// The path `P_n` on `n` vertices, edges `i - (i+1)`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::with_capacity(n)?;
        for v in 1..n {
            g.add_edge_mut(v - 1, v);
        }
        Ok(g)
    }

    /// The cycle `C_n`; `n >= 3` required.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        let mut g = Graph::path(n)?;
        g.add_edge_mut(n - 1, 0);
        Ok(g)
    }

    /// The star `K_{1,d}` with center `0` and leaves `1..=d`.
    pub fn star(d: usize) -> Result<Graph> {
        let mut g = Graph::with_capacity(d + 1)?;
        for v in 1..=d {
            g.add_edge_mut(0, v);
        }
        Ok(g)
    }

    /// The matching `tK2`, edge `i` on vertices `2i, 2i+1`.
    pub fn matching(t: usize) -> Result<Graph> {
        let n = t.checked_mul(2).ok_or(Error::VertexCapExceeded(usize::MAX))?;
        let mut g = Graph::with_capacity(n)?;
        for i in 0..t {
            g.add_edge_mut(2 * i, 2 * i + 1);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_nonempty(&self) -> bool {
        self.adj.iter().any(|&row| row != 0)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges in ascending `(u,v)` order. This is the reference order used by
    /// colorings and certificates.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertex_count: self.n,
            edge_count: self.edge_count(),
            max_degree: self.max_degree(),
            isolate_count: self.adj.iter().filter(|&&row| row == 0).count(),
        }
    }

    /// Vertex-disjoint union; `other`'s vertices are renumbered after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCapExceeded(n));
        }
        let mut rows = Vec::with_capacity(n);
        rows.extend_from_slice(&self.adj);
        rows.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph::from_rows(rows))
    }

    /// Induced subgraph on the vertices outside `removed` (a bitmask).
    ///
    /// Returns the subgraph and the renumbering map: entry `new` holds the
    /// old index of the surviving vertex now labeled `new`.
    pub fn delete_vertices(&self, removed: u64) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| removed >> v & 1 == 0).collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut rows = vec![0u64; keep.len()];
        for (new, &old) in keep.iter().enumerate() {
            for w in bits(self.adj[old] & !removed) {
                rows[new] |= 1 << old_to_new[w];
            }
        }
        (Graph::from_rows(rows), keep)
    }

    /// Mask of the listed vertices; panics on an index `>= n`.
    pub fn vertex_set(&self, vs: &[usize]) -> u64 {
        let mut mask = 0;
        for &v in vs {
            assert!(v < self.n, "vertex {v} out of range");
            mask |= 1 << v;
        }
        mask
    }

    /// Deletes all isolated vertices; returns the core and the number of
    /// isolates removed, so the input is the core plus that many `K1`s.
    pub fn isolate_free_core(&self) -> (Graph, usize) {
        let isolated: u64 = (0..self.n).filter(|&v| self.adj[v] == 0).fold(0, |m, v| m | 1 << v);
        let (core, _) = self.delete_vertices(isolated);
        (core, isolated.count_ones() as usize)
    }

    /// Adds `s` isolated vertices.
    pub fn pad_with_isolates(&self, s: usize) -> Result<Graph> {
        let n = self.n + s;
        if n > MAX_VERTICES {
            return Err(Error::VertexCapExceeded(n));
        }
        let mut rows = self.adj.clone();
        rows.resize(n, 0);
        Ok(Graph::from_rows(rows))
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for old in 0..self.n {
            for w in bits(self.adj[old]) {
                rows[perm[old]] |= 1 << perm[w];
            }
        }
        Graph::from_rows(rows)
    }

    /// Connected-component membership masks, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut grown = comp;
                for u in bits(comp) {
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-coloring of the vertices if one exists.
    ///
    /// Deterministic: the lowest vertex of each component goes on the left.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![u8::MAX; self.n];
        let mut left = 0u64;
        let mut right = 0u64;
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in bits(self.adj[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        for (v, &s) in side.iter().enumerate() {
            if s == 0 {
                left |= 1 << v;
            } else {
                right |= 1 << v;
            }
        }
        Some(Bipartition { left, right })
    }

    /// Searches for a not-necessarily-induced copy of `pattern` in `self`.
    ///
    /// Returns an injective map `pattern vertex -> host vertex` carrying
    /// every pattern edge onto a host edge, or `None`.
    pub fn contains_subgraph(&self, pattern: &Graph) -> Option<Vec<usize>> {
        crate::embed::find_embedding(self, pattern)
    }

    /// A byte string equal across exactly the isomorphism class of `self`.
    ///
    /// Exact (refinement plus backtracking, no hashing); intended scale is
    /// the solver's host sizes, roughly 20 vertices per connected component.
    pub fn canonical_code(&self) -> Vec<u8> {
        crate::canon::canonical_form(self).code_bytes()
    }

    /// The canonically labeled representative of `self`'s isomorphism class.
    pub fn canonical_form(&self) -> Graph {
        crate::canon::canonical_form(self)
    }

    /// Packs `n` plus the upper-triangle adjacency bits of this labeling.
    pub(crate) fn code_bytes(&self) -> Vec<u8> {
        let mut out = vec![self.n as u8];
        let mut acc = 0u8;
        let mut nbits = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                acc = acc << 1 | (self.adj[u] >> v & 1) as u8;
                nbits += 1;
                if nbits == 8 {
                    out.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(acc << (8 - nbits));
        }
        out
    }

    /// Standard graph6 encoding (long form for 63 and 64 vertices).
    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    /// Decodes a standard graph6 string; the 64-vertex cap applies.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        crate::graph6::decode(text)
    }
}
