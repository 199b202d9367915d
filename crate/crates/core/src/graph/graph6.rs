//! graph6 text encoding.
//!
//! Layout: size field `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte (most significant first) and offset by 63. Padding bits are zero.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (start, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, format!("byte {b} outside 63..=126")));
        }
    }
    let (n, data_at) = parse_size(body).map_err(|(i, why)| err(start + i, why))?;

    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let data = &body[data_at..];
    if data.len() != need {
        return Err(err(
            start + data_at + data.len().min(need),
            format!("expected {need} data bytes for n={n}, found {}", data.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let last = data[need - 1] - BIAS;
        let pad = 6 - bit % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + data_at + need - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are simple"))
}

fn parse_size(body: &[u8]) -> Result<(usize, usize), (usize, String)> {
    let group = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
    };
    match body {
        [] => Err((0, "empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err((2 + rest.len(), "truncated 8-byte size field".into()));
            }
            Ok((group(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err((1 + rest.len(), "truncated 4-byte size field".into()));
            }
            let n = group(&rest[..3]);
            if n < 63 {
                return Err((0, format!("size {n} must use the one-byte form")));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((usize::from(b - BIAS), 1)),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
