//! Interchange formats: bit-exact graph6, the human-authored edge-list
//! format, and DOT export.
//!
//! graph6 reference layout: one byte `63 + n` for the order (only the
//! single-byte short form, n < 63, is supported), then the upper-triangle
//! adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed column-major
//! six to a byte (high bit first), each payload byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_HEADER: &str = ">>graph6<<";

/// Decode a single graph6 record; an optional `>>graph6<<` header is
/// stripped first.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line
        .strip_prefix(G6_HEADER)
        .unwrap_or(line)
        .trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Truncated {
            needed: 1,
            found: 0,
        });
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::BadChar { byte: b, pos });
        }
    }
    if bytes[0] == 126 {
        return Err(Error::UnsupportedOrder);
    }
    let n = (bytes[0] - 63) as usize;
    let payload = &bytes[1..];
    let nbits = n * (n.saturating_sub(1)) / 2;
    let needed = nbits.div_ceil(6);
    if payload.len() < needed {
        return Err(Error::Truncated {
            needed,
            found: payload.len(),
        });
    }
    if payload.len() > needed {
        return Err(Error::TrailingBytes);
    }
    let mut adj = vec![0u64; n];
    let mut pos = 0usize;
    for col in 1..n {
        for row in 0..col {
            let bit = (payload[pos / 6] - 63) >> (5 - pos % 6) & 1;
            if bit == 1 {
                adj[row] |= 1u64 << col;
                adj[col] |= 1u64 << row;
            }
            pos += 1;
        }
    }
    Ok(Graph::from_rows(n, adj))
}

/// Encode a graph in the single-byte graph6 short form. Graph orders are
/// capped at 62 by construction, so this cannot fail.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0usize;
    for col in 1..n {
        for row in 0..col {
            acc <<= 1;
            if g.has_edge(row, col) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable")
}

/// Parse the edge-list format: first line `n m`, then `m` lines `u v`
/// (0-based vertex indices).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::ParseError {
        line: 1,
        msg: "empty input".into(),
    })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), 1, "vertex count")?;
    let m: usize = parse_field(it.next(), 1, "edge count")?;
    if it.next().is_some() {
        return Err(Error::ParseError {
            line: 1,
            msg: "expected exactly \"n m\"".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, line) = lines.next().ok_or(Error::ParseError {
            line: edges.len() + 2,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let lineno = idx + 1;
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), lineno, "edge endpoint")?;
        let v: usize = parse_field(it.next(), lineno, "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::ParseError {
                line: lineno,
                msg: "expected exactly \"u v\"".into(),
            });
        }
        if u >= n || v >= n {
            return Err(Error::IndexOutOfRange {
                index: u.max(v),
                order: n,
            });
        }
        edges.push((u, v));
    }
    if let Some((idx, line)) = lines.next() {
        if !line.trim().is_empty() {
            return Err(Error::ParseError {
                line: idx + 1,
                msg: "unexpected extra line".into(),
            });
        }
    }
    Graph::from_edges(n, &edges)
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let s = field.ok_or_else(|| Error::ParseError {
        line,
        msg: format!("missing {what}"),
    })?;
    s.parse().map_err(|_| Error::ParseError {
        line,
        msg: format!("invalid {what} {s:?}"),
    })
}

/// Emit an undirected DOT graph with vertices 0..n-1.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
