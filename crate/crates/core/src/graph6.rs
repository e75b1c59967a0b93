//! graph6 encoding and decoding.
//!
//! The standard format: an order field, then the upper triangle of the
//! adjacency matrix read column by column (bit for `(i,j)`, `i < j`, ordered
//! by `j` then `i`), packed big-endian into 6-bit groups offset by 63.
//! Orders 63 and 64 use the `~`-prefixed long form.

use crate::{Error, Graph, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        // long form: '~' then 18 bits of n in three sextets
        out.push('~');
        out.push(((n >> 12 & 0x3f) as u8 + 63) as char);
        out.push(((n >> 6 & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |msg: &str| Error::Graph6(format!("{msg}: {text:?}"));
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    let (n, pos): (usize, usize) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(err("order exceeds supported range"));
        }
        if bytes.len() < 4 {
            return Err(err("truncated order field"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(err("byte outside printable range"));
            }
            n = n << 6 | (b - 63) as usize;
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(err("byte outside printable range"));
        }
        ((b - 63) as usize, 1)
    };
    if n > crate::MAX_VERTICES {
        return Err(Error::VertexCapExceeded(n));
    }

    let tri_bits = n * n.saturating_sub(1) / 2;
    let need = tri_bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != need {
        return Err(err("adjacency field has wrong length"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let b = body[bit / 6];
            if !(63..=126).contains(&b) {
                return Err(err("byte outside printable range"));
            }
            if (b - 63) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // padding bits past the triangle must be zero
    if tri_bits % 6 != 0 {
        let last = body[need - 1] - 63;
        let pad = 6 - tri_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(Graph::complete(2).unwrap().to_graph6(), "A_");
        assert_eq!(Graph::empty(3).unwrap().to_graph6(), "B?");
        assert_eq!(Graph::complete(3).unwrap().to_graph6(), "Bw");
        assert_eq!(Graph::empty(0).unwrap().to_graph6(), "?");
        assert_eq!(Graph::complete(4).unwrap().to_graph6(), "C~");
        // P4 triangle bits: j=1:[1] j=2:[0,1] j=3:[0,0,1] -> 101001 = 41 -> 'h'
        assert_eq!(Graph::path(4).unwrap().to_graph6(), "Ch");
        // C5: edges (0,1),(1,2),(2,3),(3,4),(0,4)
        // columns: j=1:[1] j=2:[0,1] j=3:[0,0,1] j=4:[1,0,0,1]
        // bits 101001 1001(00) -> 41+63='h', 36+63='c'
        assert_eq!(Graph::cycle(5).unwrap().to_graph6(), "Dhc");
    }

    #[test]
    fn decode_known() {
        let g = Graph::from_graph6("A_").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let g = Graph::from_graph6("Bw").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        let g = Graph::from_graph6("B?\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
    }

    #[test]
    fn round_trip_small_library() {
        let gs = [
            Graph::empty(0).unwrap(),
            Graph::empty(1).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::star(6).unwrap(),
            Graph::matching(4).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::path(9).unwrap(),
        ];
        for g in &gs {
            let back = Graph::from_graph6(&g.to_graph6()).unwrap();
            assert_eq!(&back, g);
        }
    }

    #[test]
    fn long_form_at_63_and_64() {
        for n in [63usize, 64] {
            let g = Graph::path(n).unwrap();
            let s = g.to_graph6();
            assert!(s.starts_with('~'));
            let back = Graph::from_graph6(&s).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn decode_rejects_garbage() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("A").is_err()); // missing adjacency sextet
        assert!(Graph::from_graph6("A_?").is_err()); // trailing junk
        assert!(Graph::from_graph6("~~????").is_err()); // oversize order form
        // order 65 exceeds the vertex cap: long form with n=65
        let s65 = format!("~{}{}{}", '?', (63 + 1) as u8 as char, (63 + 1) as u8 as char);
        assert!(Graph::from_graph6(&s65).is_err());
        // nonzero padding: order 2 has one triangle bit, so '~' (all six
        // bits set) leaves dirt in the five pad positions
        assert!(Graph::from_graph6("A~").is_err());
    }
}
