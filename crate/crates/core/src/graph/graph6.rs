//! The graph6 text encoding.
//!
//! A header `N(n)` is followed by the upper triangle of the adjacency
//! matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, packed six bits
//! per printable byte (value + 63), zero padded.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses one graph6 line (an optional `>>graph6<<` prefix and surrounding
/// whitespace are tolerated).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty encoding"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside the printable range 63..=126")));
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(malformed("eight-byte header: graph is far larger than 64 vertices"));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        if n < 63 {
            return Err(malformed(format!("four-byte header used for n = {n} < 63")));
        }
        (n, &bytes[4..])
    } else {
        return Err(malformed("truncated header"));
    };

    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if n == 0 {
        return Err(malformed("zero-vertex graphs are not supported"));
    }

    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.set_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    Ok(g)
}

/// Canonical graph6 encoding (no `>>graph6<<` prefix, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
