//! graph6 text encoding and the plain edge-list format.
//!
//! graph6: a size prefix followed by the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte, each byte offset by 63.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed size prefix")]
    BadSizePrefix,
    #[error("byte {byte:#04x} at position {position} outside the printable range 63..=126")]
    BadCharacter { position: usize, byte: u8 },
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("expected header `n m`, found {0:?}")]
    BadHeader(String),
    #[error("expected edge `v w`, found {0:?}")]
    BadEdge(String),
    #[error("input ended after {found} of {expected} edges")]
    Truncated { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let value = |b: &[u8]| b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - OFFSET) as usize);
    match bytes {
        [] => Err(Graph6Error::Empty),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), 8)),
        [126, 126, ..] => Err(Graph6Error::BadSizePrefix),
        [126, rest @ ..] if rest.len() >= 3 => Ok((value(&rest[..3]), 4)),
        [126, ..] => Err(Graph6Error::BadSizePrefix),
        [b, ..] => Ok(((b - OFFSET) as usize, 1)),
    }
}

fn encode_size(n: usize, out: &mut String) {
    let digits = match n {
        0..=62 => {
            out.push((n as u8 + OFFSET) as char);
            return;
        }
        63..=258_047 => {
            out.push('~');
            3
        }
        _ => {
            out.push_str("~~");
            6
        }
    };
    for k in (0..digits).rev() {
        out.push((((n >> (6 * k)) & 0x3f) as u8 + OFFSET) as char);
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some((position, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(OFFSET..=126).contains(&b)) {
        return Err(Graph6Error::BadCharacter { position, byte });
    }
    let (n, skip) = decode_size(bytes)?;
    let data = &bytes[skip..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::BadLength { n, expected, found: data.len() });
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = data[expected - 1] - OFFSET;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Canonical graph6 line (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + bits.div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

/// Whether a line looks like an edge-list header (`n m`, two integers).
pub fn is_edge_list_header(line: &str) -> bool {
    let mut parts = line.split_whitespace();
    matches!(
        (parts.next(), parts.next(), parts.next()),
        (Some(a), Some(b), None) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok()
    )
}

/// Parses an edge list: a header `n m` then `m` lines `v w`.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().unwrap_or_default();
    let (n, m) = parse_pair(header).ok_or_else(|| EdgeListError::BadHeader(header.to_owned()))?;
    let mut edges = Vec::with_capacity(m);
    for found in 0..m {
        let line = lines.next().ok_or(EdgeListError::Truncated { expected: m, found })?;
        edges.push(parse_pair(line).ok_or_else(|| EdgeListError::BadEdge(line.to_owned()))?);
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub(crate) fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let a = parts.next()?.parse().ok()?;
    let b = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((a, b))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (v, w) in g.edges() {
        out.push_str(&format!("{v} {w}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5));
        assert_eq!(parse_graph6("D~{").unwrap(), complete(5));
        assert_eq!(emit_graph6(&complete(5)), "D~{");
        assert_eq!(emit_graph6(&Graph::empty(5)), "D??");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(">>graph6<<D~{\n").unwrap(), complete(5));
    }

    #[test]
    fn known_encodings() {
        // reference strings from an independent encoder
        assert_eq!(emit_graph6(&cycle(5)), "Dhc");
        assert_eq!(emit_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(parse_graph6("DQc").unwrap(), make([(0, 2), (0, 4), (1, 3), (3, 4)], 5));
    }

    fn make<const K: usize>(edges: [(usize, usize); K], n: usize) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn rejects_malformed() {
        // five vertices need ten bits, i.e. two data bytes
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::BadLength { n: 5, expected: 2, found: 1 }));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadSizePrefix));
        assert!(matches!(parse_graph6("D? ?"), Err(Graph6Error::BadCharacter { position: 2, .. })));
        // last byte '@' = 000001: a padding bit is set
        assert_eq!(parse_graph6("D?@"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn multibyte_size_prefix() {
        let g = Graph::from_edges(100, [(0, 99), (42, 43)]).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g, cycle(5));
        assert_eq!(parse_edge_list(&emit_edge_list(&petersen())).unwrap(), petersen());
        assert_eq!(parse_edge_list("3 2\n0 1\n"), Err(EdgeListError::Truncated { expected: 2, found: 1 }));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(EdgeListError::BadEdge(_))));
        assert!(matches!(parse_edge_list("3 1\n0 0\n"), Err(EdgeListError::Graph(_))));
        assert!(is_edge_list_header("10 45") && !is_edge_list_header("D~{"));
    }

    proptest! {
        #[test]
        fn roundtrip_random(n in 0usize..80, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13; state ^= state >> 7; state ^= state << 17;
                    if state % 3 == 0 { edges.push((i, j)); }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let line = emit_graph6(&g);
            prop_assert_eq!(parse_graph6(&line).unwrap(), g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&line).unwrap()), line);
        }
    }
}
