//! Text formats: graph6 and a plain `n m` edge list.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Encodes `g` in graph6. Upper triangle is written column by column,
/// padded with zero bits to a multiple of six.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b:#04x} outside printable range")));
    }
    let sextet = |b: u8| (b - BIAS) as usize;
    let (n, body) = match bytes {
        [] => return Err(g6_err("empty record")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err("truncated 8-byte size header"));
            }
            let n = rest[..6].iter().fold(0, |acc, &b| (acc << 6) | sextet(b));
            (n, &rest[6..])
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated 4-byte size header"));
            }
            let n = rest[..3].iter().fold(0, |acc, &b| (acc << 6) | sextet(b));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b), rest),
    };
    if n == 0 {
        return Err(g6_err("graph has no vertices"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} adjacency bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (sextet(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(g6_err("nonzero padding bits"));
    }
    let mut rows = vec![VertexSet::empty(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Parses a file with one graph6 record per line; blank lines are skipped.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// `n m` on the first line followed by `m` lines of `u v` (0-based).
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |m: String| Error::EdgeList(m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| err("missing header".into()))?;
    let nums = |line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|t| t.parse().map_err(|_| err(format!("not a number: {t:?}"))))
            .collect()
    };
    let (n, m) = match nums(header)?[..] {
        [n, m] => (n, m),
        _ => return Err(err(format!("header must be `n m`, got {header:?}"))),
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        match nums(line)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(err(format!("edge line must be `u v`, got {line:?}"))),
        }
    }
    if edges.len() != m {
        return Err(err(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

/// Reads either format: an `n m` header selects the edge-list reader,
/// anything else is treated as graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.split_whitespace().count() == 2
            && line.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
        {
            parse_edge_list(text)
        }
        Some(line) => parse_graph6(line),
        None => Err(g6_err("empty input")),
    }
}
