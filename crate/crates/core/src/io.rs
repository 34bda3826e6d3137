//! Graph ingestion: the graph6 format (bit-exact decode and encode) and
//! a plain edge-list format.

use crate::error::{EdgeListError, Graph6Error};
use crate::graph::Graph;

const G6_HEADER: &str = ">>graph6<<";

/// Decode a graph6 string. The optional `>>graph6<<` header is skipped;
/// surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(G6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter { pos, byte: b });
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit orders are out of range for this tool
            let mut n: u64 = 0;
            for &b in bytes.iter().skip(2).take(6) {
                n = n << 6 | u64::from(b - 63);
            }
            return Err(Graph6Error::UnsupportedSize(n));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated);
        }
        let n = (u64::from(bytes[1] - 63) << 12)
            | (u64::from(bytes[2] - 63) << 6)
            | u64::from(bytes[3] - 63);
        (n, 4)
    } else {
        (u64::from(bytes[0] - 63), 1)
    };
    if n > 1 << 18 {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() < pos + nchars {
        return Err(Graph6Error::Truncated);
    }
    if bytes.len() > pos + nchars {
        return Err(Graph6Error::TrailingGarbage);
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    // upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    for v in 1..n {
        for u in 0..v {
            let chunk = bytes[pos + bit / 6] - 63;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    while bit < nchars * 6 {
        let chunk = bytes[pos + bit / 6] - 63;
        if chunk >> (5 - bit % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
        bit += 1;
    }
    pos += nchars;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, &edges).map_err(|_| Graph6Error::TrailingGarbage)
}

/// Encode a graph as graph6; the exact inverse of [`parse_graph6`].
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.has_edge(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(63 + chunk);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse lines of `u v` edges, with an optional leading `n <count>`
/// header fixing the vertex count.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex = 0usize;
    let mut saw_vertex = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if idx == 0 && tokens.first() == Some(&"n") {
            if tokens.len() != 2 {
                return Err(EdgeListError::BadTokens(lineno));
            }
            declared_n = Some(
                tokens[1]
                    .parse()
                    .map_err(|_| EdgeListError::NonInteger(lineno, tokens[1].to_string()))?,
            );
            continue;
        }
        if tokens.len() != 2 {
            return Err(EdgeListError::BadTokens(lineno));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| EdgeListError::NonInteger(lineno, tok.to_string()))?;
        }
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Err(EdgeListError::SelfLoop(lineno));
        }
        if let Some(n) = declared_n {
            if u >= n || v >= n {
                return Err(EdgeListError::VertexOutOfRange(lineno));
            }
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(EdgeListError::DuplicateEdge(lineno));
        }
        edges.push(e);
        max_vertex = max_vertex.max(v).max(u);
        saw_vertex = true;
    }
    let n = declared_n.unwrap_or(if saw_vertex { max_vertex + 1 } else { 0 });
    Graph::from_edges(n, &edges).map_err(|_| EdgeListError::BadTokens(0))
}
