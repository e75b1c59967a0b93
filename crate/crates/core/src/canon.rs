//! Canonical labeling by individualization and refinement.
//!
//! Each connected component is canonicalized separately (the leaf code is
//! the lexicographically largest packed adjacency triangle over the search
//! tree), then components are composed in sorted code order. Branching only
//! tries one representative per twin class, which keeps stars, cliques and
//! complete bipartite blocks linear instead of factorial.

use crate::graph::{bits, low_bits, Graph};

/// Canonically labeled representative of the isomorphism class.
pub(crate) fn canonical_form(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut parts: Vec<Graph> = g
        .components()
        .iter()
        .map(|&comp| {
            let (sub, _) = g.delete_vertices(low_bits(n) & !comp);
            canonical_component(&sub)
        })
        .collect();
    parts.sort_by(|a, b| a.code_bytes().cmp(&b.code_bytes()));
    let mut out = Graph::empty(0).expect("zero is under the cap");
    for p in &parts {
        out = out.disjoint_union(p).expect("union of parts of g fits");
    }
    out
}

fn canonical_component(g: &Graph) -> Graph {
    let n = g.vertex_count();
    if n <= 1 {
        return g.clone();
    }
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(g.rows(), n, vec![low_bits(n)], &mut best);
    let (_, perm) = best.expect("search visits at least one leaf");
    g.relabel(&perm)
}

/// Splits every cell by neighbor counts against the current cells until the
/// partition is equitable. Subcells are ordered by signature, so the result
/// depends only on the isomorphism type and the incoming cell order.
fn refine(rows: &[u64], mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let mut next: Vec<u64> = Vec::with_capacity(cells.len());
        for &cell in &cells {
            if cell.count_ones() <= 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u32>, u64)> = Vec::new();
            for v in bits(cell) {
                let sig: Vec<u32> =
                    cells.iter().map(|&c| (rows[v] & c).count_ones()).collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => *members |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            groups.sort();
            next.extend(groups.into_iter().map(|(_, members)| members));
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(rows: &[u64], n: usize, cells: Vec<u64>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let cells = refine(rows, cells);
    if cells.len() == n {
        // discrete partition: cell position is the new label
        let mut perm = vec![0usize; n];
        for (new, &cell) in cells.iter().enumerate() {
            perm[cell.trailing_zeros() as usize] = new;
        }
        let code = code_under(rows, n, &perm);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    }

    // target the smallest non-singleton cell
    let (ti, &target) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.count_ones() > 1)
        .min_by_key(|(_, c)| c.count_ones())
        .expect("partition is not discrete");

    // swapping two twins is an automorphism fixing everything else, so
    // their branches produce identical leaf code sets
    let mut reps: Vec<usize> = Vec::new();
    for v in bits(target) {
        let twin_of_rep = reps.iter().any(|&u| {
            let outside = !(1u64 << u | 1u64 << v);
            rows[u] & outside == rows[v] & outside
        });
        if !twin_of_rep {
            reps.push(v);
        }
    }

    for v in reps {
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..ti]);
        child.push(1u64 << v);
        child.push(target & !(1u64 << v));
        child.extend_from_slice(&cells[ti + 1..]);
        search(rows, n, child, best);
    }
}

/// Upper-triangle adjacency bits of the relabeled graph, row-major, packed
/// big-endian. Leading length byte omitted: within a component it is fixed.
fn code_under(rows: &[u64], n: usize, perm: &[usize]) -> Vec<u8> {
    let mut relabeled = vec![0u64; n];
    for old in 0..n {
        for w in bits(rows[old]) {
            relabeled[perm[old]] |= 1 << perm[w];
        }
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2 / 8 + 1);
    let mut acc = 0u8;
    let mut nbits = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            acc = acc << 1 | (relabeled[u] >> v & 1) as u8;
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
