//! graph6 encoding and decoding (one graph per line, sparse6 not supported).
//!
//! The format packs the upper triangle of the adjacency matrix in column
//! order — bit k runs over pairs (0,1), (0,2), (1,2), (0,3), ... — six bits
//! per printable byte, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decode one graph6 line. An optional `>>graph6<<` header is tolerated;
/// trailing CR/LF is stripped.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let (line, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(base, "empty line"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("character {b} out of range 63..126")));
        }
    }

    // order field: one byte for n <= 62, 126 + three bytes for larger n
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6_err(base, "8-byte order field implies n > 64"));
        }
        if bytes.len() < 4 {
            return Err(g6_err(base, "truncated length field"));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::OrderLimit(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(g6_err(
            base + bytes.len(),
            format!("truncated: need {nbytes} adjacency bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(g6_err(base + pos + nbytes, "trailing garbage"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit / 6];
            let shift = 5 - bit % 6;
            if byte - 63 >> shift & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // remaining padding bits must be zero
    if nbits % 6 != 0 {
        let byte = bytes[pos + nbits / 6] - 63;
        let pad = 6 - nbits % 6;
        if byte & ((1 << pad) - 1) != 0 {
            return Err(g6_err(base + pos + nbits / 6, "nonzero padding bits"));
        }
    }
    pos += nbytes;
    let _ = pos;
    Ok(g)
}

/// Canonical (minimal-length) graph6 encoding.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    let _ = nbits;
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse a corpus: one graph per line, blank lines skipped. Returns the
/// decoded graphs with their 1-based line numbers, plus per-line errors.
pub fn parse_corpus(text: &str) -> (Vec<(usize, Graph)>, Vec<(usize, Error)>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        match from_graph6(line) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => errors.push((i + 1, e)),
        }
    }
    (graphs, errors)
}
