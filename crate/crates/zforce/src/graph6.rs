//! graph6 encoding as used by nauty's `geng` and most graph corpora.

use thiserror::Error;
use zforce_core::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const SMALL_LIMIT: usize = 62;
const MEDIUM_LIMIT: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 size header")]
    MalformedHeader,
    #[error("adjacency bits truncated: expected {expected} bytes, found {found}")]
    TruncatedBitVector { expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    NonPrintableByte { offset: usize, byte: u8 },
    #[error("{extra} unexpected bytes after the adjacency bits")]
    TrailingBytes { extra: usize },
    #[error("padding bits in the last byte are not zero")]
    NonZeroPadding,
    #[error("graph has {0} vertices, more than graph6 can carry")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SMALL_LIMIT {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_LIMIT {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

/// Encodes `g` without the optional `>>graph6<<` header.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);

    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = (word << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sixbits(bytes: &[u8], base: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &byte)| match byte {
            63..=126 => Ok(byte - 63),
            _ => Err(Graph6Error::NonPrintableByte {
                offset: base + i,
                byte,
            }),
        })
        .collect()
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let take = |from: usize, count: usize| -> Result<usize, Graph6Error> {
        let digits = bytes
            .get(from..from + count)
            .ok_or(Graph6Error::MalformedHeader)?;
        Ok(sixbits(digits, from)?
            .iter()
            .fold(0, |acc, &d| (acc << 6) | d as usize))
    };
    match bytes {
        [] => Err(Graph6Error::MalformedHeader),
        [126, 126, ..] => {
            let n = take(2, 6)?;
            if n <= MEDIUM_LIMIT {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = take(1, 3)?;
            if n <= SMALL_LIMIT {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sixbits(&[*b], 0)?[0] as usize, 1)),
    }
}

/// Decodes one graph6 string. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored; padding bits must be zero.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header_len) = parse_size(bytes)?;
    if n > u32::MAX as usize {
        return Err(Graph6Error::TooLarge(n));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBitVector {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            extra: body.len() - expected,
        });
    }
    let words = sixbits(body, header_len)?;
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if words[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if words[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_list(n, edges)?)
}
