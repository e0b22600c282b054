//! graph6 reader/writer (short form, n ≤ 62).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order — bits x(0,1), x(0,2), x(1,2),
//! x(0,3), … — packed big-endian six per byte, each data byte offset by 63,
//! with zero padding in the final byte.

use thiserror::Error;

use crate::graph::Graph;

/// Printable graph6 byte range.
const BASE: u8 = 63;
const MAX_SHORT_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("long-form graph6 (n > 62) is not supported, byte offset 0")]
    LongForm,
    #[error("graph6 encodes a graph with no vertices, byte offset 0")]
    ZeroVertices,
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated graph6 string: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unexpected trailing byte at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final data byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph too large for graph6 short form: n = {n} > 62")]
    TooLarge { n: usize },
}

/// Decodes one short-form graph6 line.
///
/// ```
/// use graphidx::parse_graph6;
/// let k4 = parse_graph6("C~").unwrap();
/// assert_eq!((k4.order(), k4.size()), (4, 6));
/// ```
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    if header == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if !(BASE..=125).contains(&header) {
        return Err(Graph6Error::InvalidByte { byte: header, offset: 0 });
    }
    let n = (header - BASE) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { offset: 1 + expected });
    }
    for (k, &b) in data.iter().enumerate() {
        if !(BASE..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, offset: k + 1 });
        }
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let value = data[bit / 6] - BASE;
            if (value >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit_count.is_multiple_of(6) {
        let pad_bits = 6 - bit_count % 6;
        let last = data[expected - 1] - BASE;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected });
        }
    }

    Ok(Graph::new(n, edges).expect("decoded edges are simple by construction"))
}

/// Encodes a graph as a canonical short-form graph6 string.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_SHORT_N {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = vec![n as u8 + BASE];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + BASE);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BASE);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
