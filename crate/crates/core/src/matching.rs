//! Maximum matchings in general graphs and minimum vertex covers in
//! bipartite ones.
//!
//! The matcher is the classic blossom-contraction augmenting-path search:
//! greedy seeding, then one BFS phase per remaining free vertex, contracting
//! odd cycles via a `base` map. Cubic worst case, which is ample at 64
//! vertices; the arrowing searches call the row-level entry point in a tight
//! loop, so it avoids building `Graph` values.

use crate::graph::{bits, Edge, Graph};
use crate::{Error, Result};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    rows: &'a [u64],
    pair: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(rows: &'a [u64]) -> Blossom<'a> {
        let n = rows.len();
        let mut pair = vec![NONE; n];
        // greedy seed: most phases become no-ops
        for v in 0..n {
            if pair[v] != NONE {
                continue;
            }
            if let Some(w) = bits(rows[v]).find(|&w| pair[w] == NONE) {
                pair[v] = w;
                pair[w] = v;
            }
        }
        Blossom {
            rows,
            pair,
            parent: vec![NONE; n],
            base: vec![NONE; n],
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn matched_edges(&self) -> usize {
        self.pair.iter().filter(|&&w| w != NONE).count() / 2
    }

    /// Common ancestor of the blossom about to be contracted, found by
    /// walking both tree paths through current bases.
    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.rows.len();
        let mut on_path = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            if self.pair[v] == NONE {
                break;
            }
            v = self.parent[self.pair[v]];
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if on_path[v] {
                return v;
            }
            v = self.parent[self.pair[v]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.pair[v]]] = true;
            self.parent[v] = child;
            child = self.pair[v];
            v = self.parent[self.pair[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex ending
    /// an augmenting path, if one exists in the current matching.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.rows.len();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.in_tree.iter_mut().for_each(|t| *t = false);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in bits(self.rows[v]) {
                if self.base[v] == self.base[to] || self.pair[v] == to {
                    continue;
                }
                if to == root || (self.pair[to] != NONE && self.parent[self.pair[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let stem = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, stem, to);
                    self.mark_path(to, stem, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.pair[to] == NONE {
                        return Some(to);
                    }
                    let next = self.pair[to];
                    self.in_tree[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.pair[pv];
            self.pair[v] = pv;
            self.pair[pv] = v;
            v = next;
        }
    }

    /// Augments until the matching has `stop_at` edges or is maximum.
    fn run(&mut self, stop_at: usize) -> usize {
        let mut size = self.matched_edges();
        for root in 0..self.rows.len() {
            if size >= stop_at {
                break;
            }
            if self.pair[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                self.augment(end);
                size += 1;
            }
        }
        size
    }
}

/// Matching number of the graph whose adjacency rows are given, stopping
/// early once `stop_at` edges are found.
pub(crate) fn max_matching_rows(rows: &[u64], stop_at: usize) -> usize {
    Blossom::new(rows).run(stop_at)
}

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    max_matching_rows(g.rows(), usize::MAX)
}

/// A maximum matching as an edge list in ascending order.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    let mut b = Blossom::new(g.rows());
    b.run(usize::MAX);
    let mut out: Vec<Edge> = b
        .pair
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| Edge::new(v, w))
        .collect();
    out.sort();
    out
}

/// Does the graph have `t` pairwise disjoint edges? Early-exits the search.
pub fn has_matching_at_least(g: &Graph, t: usize) -> bool {
    max_matching_rows(g.rows(), t) >= t
}

/// Minimum vertex cover of a bipartite graph, as a sorted vertex list.
///
/// Standard alternating-reachability construction from a maximum matching;
/// the result size equals the matching number.
pub fn min_vertex_cover_bipartite(g: &Graph) -> Result<Vec<usize>> {
    let bp = g.bipartition().ok_or(Error::NotBipartite)?;
    let n = g.vertex_count();
    let mut b = Blossom::new(g.rows());
    let nu = b.run(usize::MAX);
    let pair = b.pair;

    // grow Z from free left vertices: non-matching edges leftward->right,
    // matching edges rightward->left
    let mut z = 0u64;
    let mut stack: Vec<usize> = bits(bp.left).filter(|&v| pair[v] == NONE).collect();
    for &v in &stack {
        z |= 1 << v;
    }
    while let Some(v) = stack.pop() {
        for w in bits(g.neighbors(v)) {
            if pair[v] == w || z >> w & 1 == 1 {
                continue;
            }
            z |= 1 << w;
            if pair[w] != NONE && z >> pair[w] & 1 == 0 {
                z |= 1 << pair[w];
                stack.push(pair[w]);
            }
        }
    }

    let cover_mask = (bp.left & !z) | (bp.right & z);
    let cover: Vec<usize> = (0..n).filter(|&v| cover_mask >> v & 1 == 1).collect();
    debug_assert_eq!(cover.len(), nu, "cover size must equal matching number");
    Ok(cover)
}
