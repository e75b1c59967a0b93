//! Exact decision procedures for the arrowing relation.
//!
//! `F -> (G, H)` holds when every red/blue coloring of `E(F)` leaves a red
//! copy of `G` or a blue copy of `H`. Three procedures are provided:
//!
//! * [`arrows_generic`] — exhaustive scan over red edge sets, the ground
//!   truth for any pair of targets;
//! * [`arrows_matching`] — specialized to red target `tK2`: branches on the
//!   edges of a found blue copy, pruning once the red side has `t` disjoint
//!   edges, so only colorings whose blue part misses the target are visited;
//! * [`arrows_bipartite_cover`] — for bipartite hosts and isolate-free blue
//!   targets, the question reduces to vertex deletions: a red graph with no
//!   `t` disjoint edges has a vertex cover of size `t-1`, and conversely
//!   reddening everything at a vertex set is the worst such coloring.
//!
//! A negative answer carries the refuting coloring; budget exhaustion is the
//! distinct [`Decision::Undecided`], never a guess.

use std::collections::HashSet;

use crate::embed::PatternPlan;
use crate::graph::{Edge, Graph};
use crate::matching::max_matching_rows;
use crate::{Error, Result};

/// A total red/blue edge coloring of a host graph.
///
/// `red[i]` refers to `host.edges()[i]`; the vector always covers every
/// edge. Owns its host so certificates stay checkable on their own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    host: Graph,
    red: Vec<bool>,
}

impl Coloring {
    pub fn new(host: Graph, red: Vec<bool>) -> Result<Coloring> {
        if red.len() != host.edge_count() {
            return Err(Error::InvalidParams(format!(
                "coloring covers {} edges, host has {}",
                red.len(),
                host.edge_count()
            )));
        }
        Ok(Coloring { host, red })
    }

    fn from_mask(host: &Graph, mask: u64) -> Coloring {
        let m = host.edge_count();
        Coloring {
            host: host.clone(),
            red: (0..m).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn red_flags(&self) -> &[bool] {
        &self.red
    }

    pub fn red_edges(&self) -> Vec<Edge> {
        self.split(true)
    }

    pub fn blue_edges(&self) -> Vec<Edge> {
        self.split(false)
    }

    fn split(&self, want_red: bool) -> Vec<Edge> {
        self.host
            .edges()
            .into_iter()
            .zip(&self.red)
            .filter(|&(_, &r)| r == want_red)
            .map(|(e, _)| e)
            .collect()
    }

    /// The red subgraph on the full host vertex set.
    pub fn red_graph(&self) -> Graph {
        self.side(true)
    }

    /// The blue subgraph on the full host vertex set.
    pub fn blue_graph(&self) -> Graph {
        self.side(false)
    }

    fn side(&self, want_red: bool) -> Graph {
        let pairs: Vec<(usize, usize)> = self
            .split(want_red)
            .into_iter()
            .map(|e| (e.u, e.v))
            .collect();
        Graph::from_edges(self.host.vertex_count(), &pairs)
            .expect("edges come from the host")
    }
}

/// Which procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    GenericEnum,
    MatchingBranch,
    BipartiteCover,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::GenericEnum => "generic-enum",
            Method::MatchingBranch => "matching-branch",
            Method::BipartiteCover => "bipartite-cover",
        }
    }
}

/// The three-way outcome of an arrowing search.
#[derive(Debug, Clone)]
pub enum Decision {
    Arrows,
    /// A coloring with neither a red copy of the red target nor a blue copy
    /// of the blue target.
    Fails(Box<Coloring>),
    /// The work budget ran out first.
    Undecided,
}

#[derive(Debug, Clone)]
pub struct ArrowVerdict {
    pub decision: Decision,
    pub method: Method,
    /// Embedding-search nodes spent.
    pub work: u64,
}

impl ArrowVerdict {
    /// `Some(answer)` when decided, `None` when the budget ran out.
    pub fn arrows(&self) -> Option<bool> {
        match self.decision {
            Decision::Arrows => Some(true),
            Decision::Fails(_) => Some(false),
            Decision::Undecided => None,
        }
    }

    pub fn certificate(&self) -> Option<&Coloring> {
        match &self.decision {
            Decision::Fails(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self.decision, Decision::Undecided)
    }
}

/// Edge-count cap and work budget for the searches.
///
/// The caps guard against accidental exponential blowups; pass a larger
/// `max_edges` explicitly to override. Work is metered in embedding-search
/// candidate visits.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    pub max_edges: usize,
    pub node_budget: u64,
}

impl SearchLimits {
    pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

    /// Default cap for the exhaustive coloring scan.
    pub fn generic() -> SearchLimits {
        SearchLimits {
            max_edges: 20,
            node_budget: Self::DEFAULT_BUDGET,
        }
    }

    /// Default cap for the specialized matching search, which tolerates
    /// larger hosts than the exhaustive scan.
    pub fn matching() -> SearchLimits {
        SearchLimits {
            max_edges: 32,
            node_budget: Self::DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(self, node_budget: u64) -> SearchLimits {
        SearchLimits {
            node_budget,
            ..self
        }
    }

    fn check(&self, f: &Graph) -> Result<()> {
        let edges = f.edge_count();
        if edges > self.max_edges {
            return Err(Error::EdgeCapExceeded {
                edges,
                cap: self.max_edges,
            });
        }
        Ok(())
    }
}

fn rows_of_mask(host: &Graph, edges: &[Edge], mask: u64, invert: bool) -> Vec<u64> {
    let mut rows = vec![0u64; host.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        if (mask >> i & 1 == 1) != invert {
            rows[e.u] |= 1 << e.v;
            rows[e.v] |= 1 << e.u;
        }
    }
    rows
}

/// Exact decision of `F -> (G, H)` by scanning red edge sets in ascending
/// mask order. The first bad coloring found (no red `G`, no blue `H`) is the
/// certificate, so certificates are lexicographically least.
pub fn arrows_generic(f: &Graph, g: &Graph, h: &Graph, limits: SearchLimits) -> Result<ArrowVerdict> {
    limits.check(f)?;
    let edges = f.edges();
    let m = edges.len();
    if m >= 63 {
        // the scan walks u64 masks; an override cannot lift this
        return Err(Error::EdgeCapExceeded { edges: m, cap: 62 });
    }
    let g_plan = PatternPlan::new(g);
    let h_plan = PatternPlan::new(h);
    let mut budget = limits.node_budget;
    let spent = |budget: u64| limits.node_budget - budget;

    for mask in 0u64..1 << m {
        let red_rows = rows_of_mask(f, &edges, mask, false);
        let red_hit = match g_plan.embed(&red_rows, &mut budget) {
            Ok(found) => found.is_some(),
            Err(_) => {
                return Ok(ArrowVerdict {
                    decision: Decision::Undecided,
                    method: Method::GenericEnum,
                    work: spent(0),
                })
            }
        };
        if red_hit {
            continue;
        }
        let blue_rows = rows_of_mask(f, &edges, mask, true);
        let blue_hit = match h_plan.embed(&blue_rows, &mut budget) {
            Ok(found) => found.is_some(),
            Err(_) => {
                return Ok(ArrowVerdict {
                    decision: Decision::Undecided,
                    method: Method::GenericEnum,
                    work: spent(0),
                })
            }
        };
        if !blue_hit {
            return Ok(ArrowVerdict {
                decision: Decision::Fails(Box::new(Coloring::from_mask(f, mask))),
                method: Method::GenericEnum,
                work: spent(budget),
            });
        }
    }
    Ok(ArrowVerdict {
        decision: Decision::Arrows,
        method: Method::GenericEnum,
        work: spent(budget),
    })
}

/// Exact decision of `F -> (tK2, G)`.
///
/// Only red sets `R` with no `t` disjoint red edges can refute, and a
/// refuting `R` must meet every blue copy of `G`; so the search finds a copy
/// in the current blue graph and branches on which of its edges turns red.
/// Branch edges are tried by host degree sum descending.
pub fn arrows_matching(f: &Graph, t: usize, g: &Graph, limits: SearchLimits) -> Result<ArrowVerdict> {
    if t == 0 {
        return Err(Error::InvalidParams("red target t must be at least 1".into()));
    }
    limits.check(f)?;
    let edges = f.edges();
    let m = edges.len();

    // a host with under t edges cannot even go all red; the all-red
    // coloring refutes unless the blue target needs no edges and fits
    if m < t && (g.is_nonempty() || g.vertex_count() > f.vertex_count()) {
        return Ok(ArrowVerdict {
            decision: Decision::Fails(Box::new(Coloring::from_mask(f, (1 << m) - 1))),
            method: Method::MatchingBranch,
            work: 0,
        });
    }

    let plan = PatternPlan::new(g);
    // branch order: degree sum in the host, descending; ties by edge index
    let mut branch_rank: Vec<usize> = (0..m).collect();
    branch_rank.sort_by_key(|&i| {
        let e = edges[i];
        (usize::MAX - (f.degree(e.u) + f.degree(e.v)), i)
    });
    let rank_of: Vec<usize> = {
        let mut r = vec![0; m];
        for (pos, &i) in branch_rank.iter().enumerate() {
            r[i] = pos;
        }
        r
    };
    let edge_index = |e: Edge| edges.binary_search(&e).expect("edge of the host");

    let mut budget = limits.node_budget;
    let mut visited: HashSet<u64> = HashSet::new();
    let mut stack: Vec<u64> = vec![0];
    visited.insert(0);

    while let Some(red_mask) = stack.pop() {
        let blue_rows = rows_of_mask(f, &edges, red_mask, true);
        let found = match plan.embed(&blue_rows, &mut budget) {
            Ok(x) => x,
            Err(_) => {
                return Ok(ArrowVerdict {
                    decision: Decision::Undecided,
                    method: Method::MatchingBranch,
                    work: limits.node_budget,
                })
            }
        };
        let map = match found {
            None => {
                // red has matching below t by construction; all-blue misses G
                return Ok(ArrowVerdict {
                    decision: Decision::Fails(Box::new(Coloring::from_mask(f, red_mask))),
                    method: Method::MatchingBranch,
                    work: limits.node_budget - budget,
                });
            }
            Some(map) => map,
        };
        // a refuting superset of red_mask must redden an edge of this copy
        let mut copy_edges: Vec<usize> = g
            .edges()
            .iter()
            .map(|e| edge_index(Edge::new(map[e.u], map[e.v])))
            .collect();
        copy_edges.sort_by_key(|&i| rank_of[i]);
        // LIFO stack: push in reverse so high-rank branches are tried first
        for &i in copy_edges.iter().rev() {
            let child = red_mask | 1 << i;
            if child == red_mask || !visited.insert(child) {
                continue;
            }
            let red_rows = rows_of_mask(f, &edges, child, false);
            if max_matching_rows(&red_rows, t) >= t {
                continue;
            }
            stack.push(child);
        }
    }
    Ok(ArrowVerdict {
        decision: Decision::Arrows,
        method: Method::MatchingBranch,
        work: limits.node_budget - budget,
    })
}

/// Exact decision of `F -> (tK2, G)` for bipartite `F` and isolate-free `G`,
/// by checking that every deletion of `t-1` vertices leaves a copy of `G`.
///
/// Both directions of the reduction are exact. If some set `S` fails,
/// reddening exactly the edges at `S` refutes: the red side is covered by
/// `S` (under `t` disjoint edges) and a blue copy would avoid `S` entirely
/// because `G` has no isolated vertices. Conversely, in a refuting coloring
/// the red graph is bipartite with no `t` disjoint edges, so by the
/// matching/cover duality it has a vertex cover `S` of size at most `t-1`,
/// and the blue graph contains all of `F - S`, which must then miss `G`.
pub fn arrows_bipartite_cover(f: &Graph, t: usize, g: &Graph) -> Result<ArrowVerdict> {
    if t == 0 {
        return Err(Error::InvalidParams("red target t must be at least 1".into()));
    }
    if f.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    if g.stats().isolate_count > 0 {
        return Err(Error::TargetHasIsolates);
    }

    let n = f.vertex_count();
    // containment is antitone in S, so the largest size decides all
    let k = (t - 1).min(n);
    let plan = PatternPlan::new(g);
    let mut work = 0u64;

    // all k-subsets of vertices, ascending as masks via Gosper's hack
    let mut subset = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    for _ in 0..binomial(n, k) {
        let (rest, _) = f.delete_vertices(subset);
        let mut budget = u64::MAX;
        let hit = plan.embed(rest.rows(), &mut budget).expect("unlimited budget");
        work += u64::MAX - budget;
        if hit.is_none() {
            let red: Vec<bool> = f
                .edges()
                .iter()
                .map(|e| subset >> e.u & 1 == 1 || subset >> e.v & 1 == 1)
                .collect();
            let cert = Coloring::new(f.clone(), red).expect("covers every edge");
            return Ok(ArrowVerdict {
                decision: Decision::Fails(Box::new(cert)),
                method: Method::BipartiteCover,
                work,
            });
        }
        if k > 0 {
            let c = subset & subset.wrapping_neg();
            let r = subset.wrapping_add(c);
            subset = ((r ^ subset) >> 2) / c | r;
        }
    }
    Ok(ArrowVerdict {
        decision: Decision::Arrows,
        method: Method::BipartiteCover,
        work,
    })
}

/// Number of k-subsets of an n-set; inputs stay tiny here.
fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Dispatches to the fastest applicable exact procedure for `F -> (tK2, G)`:
/// the cover reduction when its preconditions hold, otherwise the branching
/// search.
pub fn arrows_auto(f: &Graph, t: usize, g: &Graph, limits: SearchLimits) -> Result<ArrowVerdict> {
    if t >= 1 && f.bipartition().is_some() && g.stats().isolate_count == 0 {
        return arrows_bipartite_cover(f, t, g);
    }
    arrows_matching(f, t, g, limits)
}

/// Independently re-checks a refutation of `F -> (tK2, G)`: the red side
/// has no `t` disjoint edges and the blue side has no copy of `G`.
pub fn certificate_refutes_matching(cert: &Coloring, t: usize, g: &Graph) -> bool {
    let red_ok = max_matching_rows(cert.red_graph().rows(), t) < t;
    red_ok && cert.blue_graph().contains_subgraph(g).is_none()
}

/// Independently re-checks a refutation of `F -> (G, H)`.
pub fn certificate_refutes_generic(cert: &Coloring, g: &Graph, h: &Graph) -> bool {
    cert.red_graph().contains_subgraph(g).is_none()
        && cert.blue_graph().contains_subgraph(h).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::complete(2).unwrap()
    }

    #[test]
    fn any_red_edge_or_all_blue_star() {
        let f = Graph::star(3).unwrap();
        let v = arrows_generic(&f, &k2(), &f, SearchLimits::generic()).unwrap();
        assert_eq!(v.arrows(), Some(true));
    }

    #[test]
    fn every_nonempty_graph_arrows_k2_and_itself() {
        for g in [
            Graph::path(3).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::star(4).unwrap(),
            Graph::matching(2).unwrap(),
        ] {
            let v = arrows_generic(&g, &k2(), &g, SearchLimits::generic()).unwrap();
            assert_eq!(v.arrows(), Some(true), "{g:?}");
        }
    }

    #[test]
    fn one_edge_short_fails_all_blue() {
        // any host with |E(G)|-1 edges: all-blue has no blue G, no red K2
        let g = Graph::cycle(4).unwrap();
        for f in [
            Graph::path(4).unwrap(),
            Graph::star(3).unwrap(),
            Graph::matching(3).unwrap(),
        ] {
            let v = arrows_generic(&f, &k2(), &g, SearchLimits::generic()).unwrap();
            assert_eq!(v.arrows(), Some(false));
            let cert = v.certificate().unwrap();
            assert!(cert.red_flags().iter().all(|&r| !r), "all-blue expected");
            assert!(certificate_refutes_generic(cert, &k2(), &g));
        }
    }

    #[test]
    fn path3_never_arrows_two_disjoint_edges() {
        let f = Graph::path(3).unwrap();
        for g in [k2(), Graph::path(3).unwrap()] {
            let v = arrows_matching(&f, 2, &g, SearchLimits::matching()).unwrap();
            assert_eq!(v.arrows(), Some(false));
            let cert = v.certificate().unwrap();
            assert!(certificate_refutes_matching(cert, 2, &g));
        }
    }

    #[test]
    fn two_disjoint_stars_arrow_two_matchings_and_a_star() {
        let s3 = Graph::star(3).unwrap();
        let f = s3.disjoint_union(&s3).unwrap();
        let v = arrows_matching(&f, 2, &s3, SearchLimits::matching()).unwrap();
        assert_eq!(v.arrows(), Some(true));
        // cross-check against the exhaustive scan with red target 2K2
        let two_k2 = Graph::matching(2).unwrap();
        let o = arrows_generic(&f, &two_k2, &s3, SearchLimits::generic()).unwrap();
        assert_eq!(o.arrows(), Some(true));
    }

    #[test]
    fn fewer_edges_than_t_fails_all_red() {
        let f = k2();
        let g = Graph::path(3).unwrap();
        let v = arrows_matching(&f, 2, &g, SearchLimits::matching()).unwrap();
        assert_eq!(v.arrows(), Some(false));
        let cert = v.certificate().unwrap();
        assert!(cert.red_flags().iter().all(|&r| r), "all-red expected");
        assert!(certificate_refutes_matching(cert, 2, &g));
    }

    #[test]
    fn cover_reduction_on_k33() {
        let f = Graph::complete_bipartite(3, 3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let v = arrows_bipartite_cover(&f, 2, &c4).unwrap();
        assert_eq!(v.arrows(), Some(true));
        // independent oracle: every single-vertex deletion keeps C4
        for s in 0..6u64 {
            let (rest, _) = f.delete_vertices(1 << s);
            assert!(rest.contains_subgraph(&c4).is_some());
        }
        // and the branching search agrees
        let w = arrows_matching(&f, 2, &c4, SearchLimits::matching()).unwrap();
        assert_eq!(w.arrows(), Some(true));
    }

    #[test]
    fn cover_at_t1_is_containment() {
        let f = Graph::complete_bipartite(2, 3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(arrows_bipartite_cover(&f, 1, &c4).unwrap().arrows(), Some(true));
        let c6 = Graph::cycle(6).unwrap();
        let v = arrows_bipartite_cover(&f, 1, &c6).unwrap();
        assert_eq!(v.arrows(), Some(false));
        assert_eq!(f.contains_subgraph(&c6), None);
        assert!(certificate_refutes_matching(v.certificate().unwrap(), 1, &c6));
    }

    #[test]
    fn cover_preconditions_enforced() {
        let odd = Graph::cycle(5).unwrap();
        assert!(matches!(
            arrows_bipartite_cover(&odd, 2, &k2()),
            Err(Error::NotBipartite)
        ));
        let padded = k2().pad_with_isolates(1).unwrap();
        let f = Graph::complete_bipartite(2, 2).unwrap();
        assert!(matches!(
            arrows_bipartite_cover(&f, 2, &padded),
            Err(Error::TargetHasIsolates)
        ));
        assert!(arrows_matching(&f, 0, &k2(), SearchLimits::matching()).is_err());
    }

    #[test]
    fn edge_cap_is_enforced_but_overridable() {
        let f = Graph::complete(7).unwrap(); // 21 edges
        assert!(matches!(
            arrows_generic(&f, &k2(), &k2(), SearchLimits::generic()),
            Err(Error::EdgeCapExceeded { edges: 21, cap: 20 })
        ));
        let big = SearchLimits {
            max_edges: 21,
            node_budget: SearchLimits::DEFAULT_BUDGET,
        };
        assert_eq!(arrows_generic(&f, &k2(), &k2(), big).unwrap().arrows(), Some(true));
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let f = Graph::complete_bipartite(3, 3).unwrap();
        let g = Graph::cycle(4).unwrap();
        let v = arrows_matching(&f, 2, &g, SearchLimits::matching().with_budget(2)).unwrap();
        assert!(v.is_undecided());
        assert_eq!(v.arrows(), None);
    }

    #[test]
    fn methods_agree_on_bipartite_hosts() {
        let cases = [
            (Graph::complete_bipartite(2, 2).unwrap(), 2, Graph::cycle(4).unwrap()),
            (Graph::complete_bipartite(3, 3).unwrap(), 2, Graph::cycle(4).unwrap()),
            (Graph::path(6).unwrap(), 2, Graph::path(3).unwrap()),
            (Graph::matching(4).unwrap(), 2, k2()),
            (Graph::star(5).unwrap(), 2, Graph::star(2).unwrap()),
            (Graph::cycle(6).unwrap(), 2, Graph::path(4).unwrap()),
        ];
        for (f, t, g) in &cases {
            let a = arrows_matching(f, *t, g, SearchLimits::matching()).unwrap().arrows();
            let b = arrows_bipartite_cover(f, *t, g).unwrap().arrows();
            let tk2 = Graph::matching(*t).unwrap();
            let c = arrows_generic(f, &tk2, g, SearchLimits::generic()).unwrap().arrows();
            assert_eq!(a, b, "branch vs cover on {f:?}");
            assert_eq!(a, c, "branch vs scan on {f:?}");
            assert!(a.is_some());
        }
    }

    #[test]
    fn auto_dispatch_picks_a_valid_method() {
        let f = Graph::complete_bipartite(3, 3).unwrap();
        let g = Graph::cycle(4).unwrap();
        let v = arrows_auto(&f, 2, &g, SearchLimits::matching()).unwrap();
        assert_eq!(v.method, Method::BipartiteCover);
        assert_eq!(v.arrows(), Some(true));

        let odd = Graph::cycle(5).unwrap();
        let w = arrows_auto(&odd, 2, &k2(), SearchLimits::matching()).unwrap();
        assert_eq!(w.method, Method::MatchingBranch);
    }

    #[test]
    fn coloring_accessors_split_cleanly() {
        let f = Graph::path(4).unwrap();
        let c = Coloring::new(f.clone(), vec![true, false, true]).unwrap();
        assert_eq!(c.red_edges().len(), 2);
        assert_eq!(c.blue_edges().len(), 1);
        assert_eq!(c.red_graph().edge_count() + c.blue_graph().edge_count(), 3);
        assert!(Coloring::new(f, vec![true]).is_err());
    }
}
