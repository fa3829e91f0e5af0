//! graph6 encoding, edge-list JSON, and DOT export.
//!
//! graph6 packs the upper triangle in column-major order, bits
//! (0,1), (0,2), (1,2), (0,3), ..., six bits per printable byte offset by 63,
//! preceded by the N(n) size header.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    match n {
        0..=62 => out.push((n as u8 + 63) as char),
        63..=258_047 => {
            out.push(126 as char);
            for shift in [12, 6, 0] {
                out.push(((n >> shift & 0x3f) as u8 + 63) as char);
            }
        }
        _ => panic!("graph6 emitter supports n <= 258047, got {n}"),
    }
    let mut bit_index = 0usize;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            current <<= 1;
            if g.has_edge(u, v) {
                current |= 1;
            }
            bit_index += 1;
            if bit_index.is_multiple_of(6) {
                out.push((current + 63) as char);
                current = 0;
            }
        }
    }
    if !bit_index.is_multiple_of(6) {
        current <<= 6 - bit_index % 6;
        out.push((current + 63) as char);
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedGraph6(format!("byte {b} outside printable range 63..126")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::MalformedGraph6("n >= 258048 not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::MalformedGraph6("truncated N(n) header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::MalformedGraph6(format!(
            "expected {nbytes} data bytes for n = {n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit_index / 6] - 63;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.set_edge(u, v, true);
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    // trailing padding must be zero
    if nbits % 6 != 0 {
        let last = bytes[pos + nbits / 6] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero trailing padding bits".into()));
        }
    }
    pos += nbytes;
    let _ = pos;
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct EdgeListJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn emit_edge_list_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeListJson { n: g.vertex_count(), edges: g.edges() }).unwrap()
}

pub fn parse_edge_list_json(text: &str) -> Result<Graph> {
    let parsed: EdgeListJson =
        serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))?;
    Graph::from_edges(parsed.n, &parsed.edges)
}

pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use proptest::prelude::*;

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn known_star_line() {
        // "D?{": 5 vertices, vertex 4 adjacent to all others
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degrees(), vec![1, 1, 1, 1, 4]);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err()); // truncated
        assert!(parse_graph6("C\u{7f}").is_err()); // byte out of range
        // K_1 with a stray nonzero data byte
        assert!(parse_graph6("@@").is_err());
        // nonzero padding: n=3 has 3 bits, pad of 3 must be zero
        let padded = String::from_utf8(vec![b'B', 63 + 0b000111]).unwrap();
        assert!(parse_graph6(&padded).is_err());
    }

    #[test]
    fn large_n_header() {
        let g = Graph::empty(100);
        let line = emit_graph6(&g);
        assert!(line.starts_with('~'));
        assert_eq!(parse_graph6(&line).unwrap().vertex_count(), 100);
    }

    #[test]
    fn dot_and_json_shapes() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(emit_edge_list_json(&g), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let dot = emit_dot(&g);
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
        let back = parse_edge_list_json(&emit_edge_list_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(n in 0usize..20, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u+1)..n {
                    if rng.gen_bool(0.4) {
                        g.set_edge(u, v, true);
                    }
                }
            }
            let line = emit_graph6(&g);
            prop_assert_eq!(parse_graph6(&line).unwrap(), g);
        }
    }
}
