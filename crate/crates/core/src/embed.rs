//! Subgraph embedding: find an injective vertex map carrying every pattern
//! edge onto a host edge (the copy need not be induced).
//!
//! The search assigns pattern vertices in a fixed order (high degree first,
//! preferring vertices with an already-placed neighbor), intersecting the
//! host neighborhoods of placed neighbors to get candidates. Work is metered
//! in candidate visits so callers can impose budgets.

use crate::graph::{bits, low_bits, Graph};

/// Search budget ran out before the question was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct BudgetExhausted;

/// A pattern preprocessed for repeated embedding queries against changing
/// host edge sets (the arrowing searches probe thousands of subgraphs of
/// one host).
pub(crate) struct PatternPlan {
    /// assignment order; non-isolated pattern vertices only
    order: Vec<usize>,
    /// for order[i]: positions j < i with order[j] adjacent to order[i]
    earlier_nbrs: Vec<Vec<usize>>,
    degree: Vec<usize>,
    isolated: Vec<usize>,
    pattern_n: usize,
}

impl PatternPlan {
    pub(crate) fn new(pattern: &Graph) -> PatternPlan {
        let n = pattern.vertex_count();
        let degree: Vec<usize> = (0..n).map(|v| pattern.degree(v)).collect();
        let isolated: Vec<usize> = (0..n).filter(|&v| degree[v] == 0).collect();

        let mut order: Vec<usize> = Vec::with_capacity(n - isolated.len());
        let mut placed = 0u64;
        while order.len() + isolated.len() < n {
            // next: adjacent to the placed set if possible, ties by degree
            let pick = (0..n)
                .filter(|&v| degree[v] > 0 && placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    let touches = (pattern.neighbors(v) & placed != 0) as usize;
                    (touches, degree[v], usize::MAX - v)
                })
                .expect("a non-isolated vertex remains");
            order.push(pick);
            placed |= 1 << pick;
        }

        let earlier_nbrs = order
            .iter()
            .map(|&v| {
                order
                    .iter()
                    .take_while(|&&u| u != v)
                    .enumerate()
                    .filter(|(_, &u)| pattern.has_edge(u, v))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();

        PatternPlan {
            order,
            earlier_nbrs,
            degree,
            isolated,
            pattern_n: n,
        }
    }

    /// Embeds into the graph given by `host_rows`, spending one unit of
    /// `budget` per candidate tried. On success the map is pattern-indexed.
    pub(crate) fn embed(
        &self,
        host_rows: &[u64],
        budget: &mut u64,
    ) -> Result<Option<Vec<usize>>, BudgetExhausted> {
        let host_n = host_rows.len();
        if self.pattern_n > host_n {
            return Ok(None);
        }
        let all = low_bits(host_n);
        let mut image = vec![usize::MAX; self.order.len()];
        let mut used = 0u64;
        let mut cand_stack: Vec<u64> = vec![0; self.order.len()];
        let mut depth = 0usize;

        if self.order.is_empty() {
            return Ok(Some(self.finish(&image, used, host_n)));
        }
        cand_stack[0] = self.candidates(0, &image, used, host_rows, all);
        loop {
            if *budget == 0 {
                return Err(BudgetExhausted);
            }
            // pop lowest candidate at this depth
            let cand = cand_stack[depth];
            if cand == 0 {
                // exhausted: backtrack
                if depth == 0 {
                    return Ok(None);
                }
                depth -= 1;
                used &= !(1u64 << image[depth]);
                image[depth] = usize::MAX;
                continue;
            }
            let h = cand.trailing_zeros() as usize;
            cand_stack[depth] = cand & cand - 1;
            *budget -= 1;
            if (host_rows[h].count_ones() as usize) < self.degree[self.order[depth]] {
                continue;
            }
            image[depth] = h;
            used |= 1 << h;
            if depth + 1 == self.order.len() {
                return Ok(Some(self.finish(&image, used, host_n)));
            }
            depth += 1;
            cand_stack[depth] = self.candidates(depth, &image, used, host_rows, all);
        }
    }

    fn candidates(
        &self,
        depth: usize,
        image: &[usize],
        used: u64,
        host_rows: &[u64],
        all: u64,
    ) -> u64 {
        let mut cand = all & !used;
        for &j in &self.earlier_nbrs[depth] {
            cand &= host_rows[image[j]];
        }
        cand
    }

    /// Extends a complete placement of the non-isolated part with the
    /// isolated pattern vertices (lowest free host vertices, in order).
    fn finish(&self, image: &[usize], used: u64, host_n: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.pattern_n];
        for (i, &p) in self.order.iter().enumerate() {
            map[p] = image[i];
        }
        let mut free = bits(low_bits(host_n) & !used);
        for &p in &self.isolated {
            map[p] = free.next().expect("capacity was checked up front");
        }
        map
    }
}

pub(crate) fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let mut budget = u64::MAX;
    PatternPlan::new(pattern)
        .embed(host.rows(), &mut budget)
        .expect("effectively unlimited budget")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(map: &[usize], host: &Graph, pattern: &Graph) {
        let mut seen = 0u64;
        for &h in map {
            assert!(h < host.vertex_count());
            assert_eq!(seen >> h & 1, 0, "not injective");
            seen |= 1 << h;
        }
        for e in pattern.edges() {
            assert!(host.has_edge(map[e.u], map[e.v]), "edge {e} not carried");
        }
    }

    #[test]
    fn positive_cases() {
        let cases = [
            (Graph::cycle(6).unwrap(), Graph::path(4).unwrap()),
            (Graph::complete(5).unwrap(), Graph::cycle(5).unwrap()),
            (Graph::complete_bipartite(3, 3).unwrap(), Graph::cycle(6).unwrap()),
            (Graph::star(5).unwrap(), Graph::star(3).unwrap()),
            (Graph::path(7).unwrap(), Graph::matching(3).unwrap()),
            // isolated pattern vertices land on leftover host vertices
            (Graph::path(4).unwrap(), Graph::empty(4).unwrap()),
            (Graph::cycle(5).unwrap(), Graph::empty(0).unwrap()),
        ];
        for (host, pattern) in &cases {
            let map = host.contains_subgraph(pattern).expect("embeds");
            check(&map, host, pattern);
        }
    }

    #[test]
    fn negative_cases() {
        let cases = [
            (Graph::cycle(6).unwrap(), Graph::cycle(3).unwrap()),
            (Graph::path(4).unwrap(), Graph::star(3).unwrap()),
            (Graph::matching(3).unwrap(), Graph::path(3).unwrap()),
            (Graph::complete(3).unwrap(), Graph::complete(4).unwrap()),
            // capacity: pattern has more vertices than the host
            (Graph::complete(3).unwrap(), Graph::empty(4).unwrap()),
            (Graph::complete_bipartite(2, 3).unwrap(), Graph::cycle(5).unwrap()),
        ];
        for (host, pattern) in &cases {
            assert!(host.contains_subgraph(pattern).is_none(), "{pattern:?} in {host:?}");
        }
    }

    #[test]
    fn budget_exhaustion_surfaces() {
        let host = Graph::complete(8).unwrap();
        let pattern = Graph::cycle(8).unwrap();
        let plan = PatternPlan::new(&pattern);
        let mut tiny = 3u64;
        assert_eq!(plan.embed(host.rows(), &mut tiny), Err(BudgetExhausted));
        let mut roomy = 1_000_000u64;
        let found = plan.embed(host.rows(), &mut roomy).unwrap();
        assert!(found.is_some());
        assert!(roomy < 1_000_000, "work was metered");
    }

    #[test]
    fn non_induced_copies_count() {
        // P3 inside K3: the image spans an extra edge, which is fine
        let host = Graph::complete(3).unwrap();
        let p3 = Graph::path(3).unwrap();
        let map = host.contains_subgraph(&p3).expect("embeds");
        check(&map, &host, &p3);
    }
}
