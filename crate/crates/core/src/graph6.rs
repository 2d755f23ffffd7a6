//! The graph6 format used by nauty and friends.
//!
//! Every byte carries six bits offset by 63, so the encoding is printable
//! ASCII in `63..=126`. The vertex count comes first (one byte up to 62,
//! otherwise `126` followed by three or six bytes), then the upper triangle
//! of the adjacency matrix column by column: `x(0,1), x(0,2), x(1,2), x(0,3),
//! ..`, packed big-endian and zero-padded to a multiple of six bits.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_VERTICES};

/// Optional header line some tools emit.
pub const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// A byte outside the printable range `63..=126`.
    InvalidByte { position: usize, byte: u8 },
    /// The length prefix ended early.
    TruncatedLength,
    /// Fewer body bytes than the vertex count requires.
    Truncated { expected: usize, found: usize },
    /// More body bytes than the vertex count allows.
    TrailingBytes { expected: usize, found: usize },
    TooManyVertices(u64),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "byte {byte} at position {position} is outside 63..=126")
            }
            Graph6Error::TruncatedLength => write!(f, "truncated vertex-count prefix"),
            Graph6Error::Truncated { expected, found } => {
                write!(f, "expected {expected} adjacency bytes, found {found}")
            }
            Graph6Error::TrailingBytes { expected, found } => {
                write!(f, "expected {expected} adjacency bytes, found {found} (trailing data)")
            }
            Graph6Error::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

fn sextet(bytes: &[u8], position: usize) -> Result<u64, Graph6Error> {
    match bytes.get(position) {
        None => Err(Graph6Error::TruncatedLength),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::InvalidByte { position, byte: b }),
    }
}

/// Decodes one graph6 code. A leading `>>graph6<<` header and a trailing
/// line ending are ignored; padding bits are not checked.
pub fn parse(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let first = sextet(bytes, 0)?;
    let (n, body_start) = if first < 63 {
        (first, 1)
    } else if sextet(bytes, 1)? < 63 {
        let n = (1..4).try_fold(0u64, |acc, i| Ok((acc << 6) | sextet(bytes, i)?))?;
        (n, 4)
    } else {
        let n = (2..8).try_fold(0u64, |acc, i| Ok((acc << 6) | sextet(bytes, i)?))?;
        (n, 8)
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let n = n as usize;

    let body = &bytes[body_start..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes { expected, found: body.len() });
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte { position: body_start + pos, byte: body[pos] });
    }

    let mut rows = alloc::vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(n, rows))
}

/// Encodes a graph without header or line ending.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn hand_decoded_codes() {
        assert_eq!(parse(b"@").unwrap(), empty(1));
        assert_eq!(parse(b"A_").unwrap(), complete(2));
        assert_eq!(parse(b"?").unwrap(), empty(0));
        // x(0,4)..x(3,4) set: a star centred at the last vertex.
        let g = parse(b"D?{").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn hand_encoded_codes() {
        assert_eq!(encode(&complete(2)), "A_");
        assert_eq!(encode(&empty(0)), "?");
        assert_eq!(parse(encode(&cycle(4)).as_bytes()).unwrap(), cycle(4));
    }

    #[test]
    fn header_and_newline_are_stripped() {
        assert_eq!(parse(b">>graph6<<A_\n").unwrap(), complete(2));
        assert_eq!(parse(b"A_\r\n").unwrap(), complete(2));
    }

    #[test]
    fn long_length_prefix() {
        for n in [62, 63, 64] {
            let g = cycle(n);
            let code = encode(&g);
            assert_eq!(code.as_bytes()[0] == 126, n > 62);
            assert_eq!(parse(code.as_bytes()).unwrap(), g);
        }
        // 65 vertices in the four-byte form.
        assert_eq!(parse(b"~?@@"), Err(Graph6Error::TooManyVertices(65)));
        // Eight-byte form.
        assert_eq!(parse(b"~~??????"), Ok(empty(0)));
        assert_eq!(parse(b"~~?"), Err(Graph6Error::TruncatedLength));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse(b""), Err(Graph6Error::Empty));
        assert_eq!(parse(b" "), Err(Graph6Error::InvalidByte { position: 0, byte: b' ' }));
        assert_eq!(parse(b"A"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        assert_eq!(parse(b"A__"), Err(Graph6Error::TrailingBytes { expected: 1, found: 2 }));
        assert_eq!(parse(b"B\x7f"), Err(Graph6Error::InvalidByte { position: 1, byte: 127 }));
        assert_eq!(parse(b"B:"), Err(Graph6Error::InvalidByte { position: 1, byte: b':' }));
    }
}
