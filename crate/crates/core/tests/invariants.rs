//! Randomized cross-checks of the core invariants against brute-force
//! oracles that share no code with the production paths.

use proptest::prelude::*;

use matchwise_core::arrowing::{arrows_matching, SearchLimits};
use matchwise_core::matching::matching_number;
use matchwise_core::Graph;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Subgraph containment by exhaustive injection, recursion on pattern
/// vertices in index order.
fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    let hn = host.vertex_count();
    let pn = pattern.vertex_count();
    if pn > hn {
        return false;
    }
    fn place(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == pattern.vertex_count() {
            return true;
        }
        for h in 0..host.vertex_count() {
            if used[h] {
                continue;
            }
            let fits = (0..v).all(|u| !pattern.has_edge(u, v) || host.has_edge(map[u], h));
            if fits {
                map.push(h);
                used[h] = true;
                if place(host, pattern, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    place(host, pattern, &mut Vec::new(), &mut vec![false; hn])
}

/// Ground-truth arrowing by walking all 2^m colorings.
fn brute_arrows(host: &Graph, t: usize, g: &Graph) -> bool {
    let edges = host.edges();
    let m = edges.len();
    assert!(m < 20, "oracle is exponential in edges");
    let n = host.vertex_count();
    'mask: for mask in 0u64..1 << m {
        let mut red_edges = Vec::new();
        let mut blue_edges = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                red_edges.push((e.u, e.v));
            } else {
                blue_edges.push((e.u, e.v));
            }
        }
        let red = Graph::from_edges(n, &red_edges).unwrap();
        if matching_number(&red) >= t {
            continue 'mask;
        }
        let blue = Graph::from_edges(n, &blue_edges).unwrap();
        if brute_contains(&blue, g) {
            continue 'mask;
        }
        return false;
    }
    true
}

proptest! {
    #[test]
    fn canonical_code_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(g.canonical_code(), relabeled.canonical_code());
    }

    #[test]
    fn graph6_round_trips_exactly(g in arb_graph(12)) {
        let text = g.to_graph6();
        let back = Graph::from_graph6(&text).unwrap();
        prop_assert_eq!(g.vertex_count(), back.vertex_count());
        prop_assert_eq!(g.edges(), back.edges());
    }

    #[test]
    fn union_adds_counts_and_commutes(a in arb_graph(7), b in arb_graph(7)) {
        let ab = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(ab.vertex_count(), a.vertex_count() + b.vertex_count());
        prop_assert_eq!(ab.edge_count(), a.edge_count() + b.edge_count());
        let ba = b.disjoint_union(&a).unwrap();
        prop_assert_eq!(ab.canonical_code(), ba.canonical_code());
    }

    #[test]
    fn core_extraction_is_idempotent(g in arb_graph(9), s in 0usize..4) {
        let (core, dropped) = g.isolate_free_core();
        prop_assert_eq!(core.vertex_count() + dropped, g.vertex_count());
        let (core2, dropped2) = core.isolate_free_core();
        prop_assert_eq!(dropped2, 0);
        prop_assert_eq!(core.edges(), core2.edges());
        let padded = g.pad_with_isolates(s).unwrap();
        prop_assert_eq!(padded.isolate_free_core().0.edges(), core.edges());
    }

    #[test]
    fn containment_matches_brute_force(host in arb_graph(6), pat in arb_graph(5)) {
        prop_assert_eq!(host.contains_subgraph(&pat).is_some(), brute_contains(&host, &pat));
    }

    #[test]
    fn containment_survives_pattern_edge_removal(host in arb_graph(7), pat in arb_graph(5)) {
        if host.contains_subgraph(&pat).is_some() {
            for e in pat.edges() {
                let thinner: Vec<(usize, usize)> = pat
                    .edges()
                    .iter()
                    .filter(|f| **f != e)
                    .map(|f| (f.u, f.v))
                    .collect();
                let p2 = Graph::from_edges(pat.vertex_count(), &thinner).unwrap();
                prop_assert!(host.contains_subgraph(&p2).is_some());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn arrowing_matches_exhaustive_colorings(
        host in arb_graph(6),
        t in 1usize..=3,
        pick in 0usize..4,
    ) {
        prop_assume!(host.edge_count() <= 9);
        let targets = [
            Graph::complete(2).unwrap(),
            Graph::path(3).unwrap(),
            Graph::star(3).unwrap(),
            Graph::matching(2).unwrap(),
        ];
        let g = &targets[pick];
        let fast = arrows_matching(&host, t, g, SearchLimits::matching())
            .unwrap()
            .arrows()
            .unwrap();
        prop_assert_eq!(fast, brute_arrows(&host, t, g));
    }
}
