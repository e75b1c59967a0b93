//! The extremal bipartite constructions: bundled graphs `B(l1,...,lk)`,
//! the arrowing hosts `U_t`, and the deletion-tolerant embedding of a
//! bundle into its host.
//!
//! Vertex numbering is fixed so embeddings and certificates reproduce:
//! X-part first, then Y-part, then pendant leaves grouped by star in part
//! order. `B(l1,...,lk)` is `K_{k,k}` with `l_i` pendant edges on the i-th
//! X-vertex; `U_t` is `K_{k+t-1,k+t-1}` with stars of sizes `l1,...,lk` on
//! the first `k` X-vertices and stars of size `l1` on the remaining `t-1`.

use crate::graph::{low_bits, Graph};
use crate::{Error, Result};

/// Parameters of a bundled bipartite graph: pendant star sizes
/// `l1 >= l2 >= ... >= lk >= 0` over `K_{k,k}`, `k >= 2`.
///
/// The constructor validates shape only; the 64-vertex cap is enforced when
/// a graph is actually built, so the closed-form statistics remain usable at
/// scales far beyond buildable graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleParams {
    ell: Vec<u64>,
}

/// Closed-form size statistics of a parameterized construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleStats {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub max_degree: u64,
}

impl BundleParams {
    pub fn new(ell: Vec<u64>) -> Result<BundleParams> {
        if ell.len() < 2 {
            return Err(Error::InvalidParams(format!(
                "bundle needs at least 2 star sizes, got {}",
                ell.len()
            )));
        }
        if ell.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "star sizes must be nonincreasing, got {ell:?}"
            )));
        }
        Ok(BundleParams { ell })
    }

    pub fn k(&self) -> usize {
        self.ell.len()
    }

    pub fn ell(&self) -> &[u64] {
        &self.ell
    }

    /// n = 2k + sum(l), m = k^2 + sum(l) = n + k(k-2), max degree k + l1.
    pub fn stats(&self) -> BundleStats {
        let k = self.ell.len() as u64;
        let sum: u64 = self.ell.iter().sum();
        BundleStats {
            vertex_count: 2 * k + sum,
            edge_count: k * k + sum,
            max_degree: k + self.ell[0],
        }
    }
}

/// Closed-form size statistics; always equal to `build_bundle(p).stats()`
/// when the graph fits under the vertex cap.
pub fn bundle_stats(p: &BundleParams) -> BundleStats {
    p.stats()
}

/// A bundle together with the matching size its host must defeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtParams {
    pub bundle: BundleParams,
    pub t: u64,
}

impl UtParams {
    pub fn new(bundle: BundleParams, t: u64) -> Result<UtParams> {
        if t < 1 {
            return Err(Error::InvalidParams("t must be at least 1".into()));
        }
        Ok(UtParams { bundle, t })
    }

    /// Sizes of the k+t-1 attached stars in X-vertex order.
    pub fn star_sizes(&self) -> Vec<u64> {
        let mut s = self.bundle.ell.clone();
        s.extend(std::iter::repeat_n(self.bundle.ell[0], self.t as usize - 1));
        s
    }

    pub fn vertex_count(&self) -> u64 {
        let side = self.bundle.k() as u64 + self.t - 1;
        2 * side + self.star_sizes().iter().sum::<u64>()
    }

    /// |E(U_t)| = (k+t-1)^2 + sum(l) + (t-1) l1.
    pub fn edge_count(&self) -> u64 {
        let side = self.bundle.k() as u64 + self.t - 1;
        side * side + self.star_sizes().iter().sum::<u64>()
    }
}

/// Grows a complete bipartite graph `K_{side,side}` and hangs the given
/// stars on successive X-vertices. Numbering: X = 0..side, Y = side..2*side,
/// then each star's leaves as a consecutive block.
fn build_with_stars(side: usize, star_sizes: &[u64]) -> Result<Graph> {
    let leaves: u64 = star_sizes.iter().sum();
    let n = 2 * side as u64 + leaves;
    if n > crate::MAX_VERTICES as u64 {
        return Err(Error::VertexCapExceeded(n as usize));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for x in 0..side {
        for y in side..2 * side {
            edges.push((x, y));
        }
    }
    let mut next_leaf = 2 * side;
    for (x, &sz) in star_sizes.iter().enumerate() {
        for _ in 0..sz {
            edges.push((x, next_leaf));
            next_leaf += 1;
        }
    }
    Graph::from_edges(n as usize, &edges)
}

/// Builds `B(l1,...,lk)`. Connected and bipartite by construction.
pub fn build_bundle(p: &BundleParams) -> Result<Graph> {
    build_with_stars(p.k(), p.ell())
}

/// Builds the host `U_t`. For `t = 1` this is the bundle itself.
pub fn build_ut(q: &UtParams) -> Result<Graph> {
    build_with_stars(q.bundle.k() + q.t as usize - 1, &q.star_sizes())
}

/// `G` together with `s` additional isolated vertices.
pub fn pad_with_isolates(g: &Graph, s: usize) -> Result<Graph> {
    g.pad_with_isolates(s)
}

/// An injective, adjacency-preserving vertex map from a bundle into a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// `map[b]` is the host vertex carrying bundle vertex `b`, in the
    /// host's own (undeleted) numbering.
    pub map: Vec<usize>,
}

/// Embeds `B = build_bundle(q.bundle)` into `U_t - S` constructively.
///
/// Recipe: a star is damaged when `S` hits its center or a private leaf;
/// each deleted vertex damages at most one star, so at least `k` stars
/// survive, and the `k` largest surviving sizes dominate `(l1,...,lk)`
/// termwise. Those stars' centers play X, the first `k` surviving
/// Y-vertices play Y, and each surviving star lends enough leaves. The map
/// is re-verified edge by edge before being returned, so a successful
/// return is itself a machine check of the argument.
pub fn embed_bundle_after_deletion(q: &UtParams, s: u64) -> Result<Embedding> {
    let host = build_ut(q)?;
    let bundle = build_bundle(&q.bundle)?;
    let deleted = s.count_ones() as u64;
    if deleted > q.t - 1 {
        return Err(Error::InvalidParams(format!(
            "{} deletions exceed the tolerance t-1 = {}",
            deleted,
            q.t - 1
        )));
    }
    if s & !low_bits(host.vertex_count()) != 0 {
        return Err(Error::InvalidParams(
            "deleted set mentions vertices outside the host".into(),
        ));
    }

    let k = q.bundle.k();
    let side = k + q.t as usize - 1;
    let sizes = q.star_sizes();

    // leaf block of star x: [block_start[x], block_start[x+1])
    let mut block_start = vec![2 * side; side + 1];
    for x in 0..side {
        block_start[x + 1] = block_start[x] + sizes[x] as usize;
    }

    let hit = |v: usize| s >> v & 1 == 1;
    let star_damaged = |x: usize| hit(x) || (block_start[x]..block_start[x + 1]).any(hit);

    let mut survivors: Vec<(u64, usize)> = (0..side)
        .filter(|&x| !star_damaged(x))
        .map(|x| (sizes[x], x))
        .collect();
    // largest sizes first, ties by X index for determinism
    survivors.sort_by_key(|&(sz, x)| (u64::MAX - sz, x));
    assert!(survivors.len() >= k, "at most t-1 of k+t-1 stars can be damaged");
    let chosen = &survivors[..k];
    for (i, &(sz, _)) in chosen.iter().enumerate() {
        assert!(sz >= q.bundle.ell[i], "surviving sizes dominate the requirement");
    }

    let surviving_y: Vec<usize> = (side..2 * side).filter(|&y| !hit(y)).collect();
    assert!(surviving_y.len() >= k, "at most t-1 Y-vertices can be deleted");

    // bundle numbering: X = 0..k, Y = k..2k, then leaf blocks
    let mut map = vec![usize::MAX; bundle.vertex_count()];
    for (i, &(_, x)) in chosen.iter().enumerate() {
        map[i] = x;
    }
    for (j, &y) in surviving_y.iter().take(k).enumerate() {
        map[k + j] = y;
    }
    let mut next_bundle_leaf = 2 * k;
    for (i, &(_, x)) in chosen.iter().enumerate() {
        let need = q.bundle.ell[i] as usize;
        for leaf in block_start[x]..block_start[x] + need {
            map[next_bundle_leaf] = leaf;
            next_bundle_leaf += 1;
        }
    }

    // re-verify: injective, avoids S, carries every bundle edge
    let mut seen = 0u64;
    for &h in &map {
        assert!(h != usize::MAX && !hit(h), "image avoids the deleted set");
        assert_eq!(seen >> h & 1, 0, "map is injective");
        seen |= 1 << h;
    }
    for e in bundle.edges() {
        assert!(host.has_edge(map[e.u], map[e.v]), "edge {e} is carried");
    }
    Ok(Embedding { map })
}
