//! graph6 encoding of simple graphs.
//!
//! Bytes are offset by 63. The vertex count comes first (one byte below
//! 63, or `~` followed by three or six bytes), then the upper triangle of the
//! adjacency matrix column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! six bits per byte, zero-padded at the end.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn g6_error(message: impl Into<String>) -> Error {
    Error::Graph6(message.into())
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(g6_error(format!("byte {b} outside the printable range 63..=126")))
    }
}

fn decode_count(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let take = |k: usize, rest: &[u8]| -> Result<usize> {
        if rest.len() < k {
            return Err(g6_error("truncated vertex count"));
        }
        rest[..k]
            .iter()
            .try_fold(0usize, |acc, &b| Ok((acc << 6) | usize::from(sextet(b)?)))
    };
    match bytes {
        [] => Err(g6_error("empty input")),
        [126, 126, rest @ ..] => Ok((take(6, rest)?, &rest[6..])),
        [126, rest @ ..] => Ok((take(3, rest)?, &rest[3..])),
        [b, rest @ ..] => Ok((usize::from(sextet(*b)?), rest)),
    }
}

/// Decodes one graph6 line into a simple graph whose edges appear in bit
/// order, each stored as `(i, j)` with `i < j`.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let (n, body) = decode_count(line.as_bytes())?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(g6_error(format!(
            "truncated bit stream: need {needed} bytes, got {}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(g6_error(format!(
            "{} trailing bytes after the adjacency data",
            body.len() - needed
        )));
    }
    let sextets = body.iter().map(|&b| sextet(b)).collect::<Result<Vec<u8>>>()?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (sextets[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n.max(1), edges).map_err(|e| match n {
        0 => g6_error("graph with zero vertices"),
        _ => e,
    })
}

/// Encodes a simple graph; multigraphs cannot be represented.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(g6_error("multigraphs have no graph6 encoding"));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    match n {
        0..=62 => out.push(n as u8 + OFFSET),
        63..=258_047 => {
            out.push(126);
            out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + OFFSET));
        }
        _ => {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + OFFSET));
        }
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adjacent[i * n + j]);
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
