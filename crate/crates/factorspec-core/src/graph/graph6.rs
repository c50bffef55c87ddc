//! The graph6 text encoding used by nauty/geng catalogs.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `126` followed by three 6-bit
//! groups for `n < 2^18`, and `126 126` followed by six groups for `n < 2^36`.
//! The body lists the upper triangle column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ..`), six bits per byte, most significant first, each
//! group offset by 63 and zero-padded at the end.

use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

pub const HEADER: &[u8] = b">>graph6<<";

const MAX_ORDER: u64 = 1 << 36;

fn group(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&c @ 63..=126) => Ok(u64::from(c - 63)),
        Some(_) => Err(Error::Format {
            offset: at,
            reason: "byte outside the printable range 63..=126",
        }),
        None => Err(Error::Format {
            offset: at,
            reason: "record ends inside the vertex count",
        }),
    }
}

/// Decodes `N(n)`, returning the order and the offset of the first body byte.
fn decode_order(bytes: &[u8]) -> Result<(u64, usize)> {
    let first = group(bytes, 0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    let (start, len) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    let mut n = 0u64;
    for i in 0..len {
        n = (n << 6) | group(bytes, start + i)?;
    }
    Ok((n, start + len))
}

/// Parses one graph6 record. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted.
pub fn parse(record: &[u8]) -> Result<Graph> {
    let mut bytes = record.strip_prefix(HEADER).unwrap_or(record);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let base = record.len()
        - record
            .strip_prefix(HEADER)
            .map_or(record.len(), <[u8]>::len);
    let shift = |e: Error| match e {
        Error::Format { offset, reason } => Error::Format {
            offset: offset + base,
            reason,
        },
        other => other,
    };

    let (order, body_start) = decode_order(bytes).map_err(shift)?;
    if order >= MAX_ORDER {
        return Err(Error::UnsupportedSize(order));
    }
    let n = usize::try_from(order).map_err(|_| Error::UnsupportedSize(order))?;
    let bits = u128::from(order) * u128::from(order.saturating_sub(1)) / 2;
    let body = &bytes[body_start..];
    if (body.len() as u128) < bits.div_ceil(6) {
        return Err(Error::Format {
            offset: base + bytes.len(),
            reason: "truncated adjacency bit stream",
        });
    }
    let body_len = bits.div_ceil(6) as usize;
    if body.len() > body_len {
        return Err(Error::Format {
            offset: base + body_start + body_len,
            reason: "trailing bytes after the adjacency bit stream",
        });
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    'outer: for (k, _) in body.iter().enumerate() {
        let value = group(body, k).map_err(|e| match e {
            Error::Format { offset, reason } => Error::Format {
                offset: offset + base + body_start,
                reason,
            },
            other => other,
        })?;
        for bit in (0..6).rev() {
            if j >= n {
                // Remaining bits are padding.
                break 'outer;
            }
            if value >> bit & 1 == 1 {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n < 1 << 18 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

/// Encodes `g` as a graph6 record without header or newline.
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!((n as u64) < MAX_ORDER, "graph6 cannot encode {n} vertices");
    let mut out = Vec::with_capacity(8 + (n * n) / 12);
    encode_order(n as u64, &mut out);
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
    out
}

/// [`encode`] as a `String`; graph6 is always ASCII.
pub fn encode_string(g: &Graph) -> alloc::string::String {
    alloc::string::String::from_utf8(encode(g)).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_goldens() {
        assert_eq!(parse(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(parse(b"A?").unwrap(), Graph::empty(2));
        assert_eq!(encode(&Graph::complete(3)), b"Bw");
        assert_eq!(encode(&Graph::complete(2)), b"A_");
        assert_eq!(encode(&Graph::empty(1)), b"@");
        assert_eq!(encode(&Graph::empty(0)), b"?");
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(parse(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
        assert_eq!(parse(b"Bw\r\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn petgraph_reference_record() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::from_edge_list(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), b"DQc");
        assert_eq!(parse(b"DQc").unwrap(), g);
    }

    #[test]
    fn format_errors() {
        assert!(matches!(
            parse(b"B\x20"),
            Err(Error::Format { offset: 1, .. })
        ));
        assert!(matches!(parse(b"C"), Err(Error::Format { .. })));
        assert!(matches!(
            parse(b"Bww"),
            Err(Error::Format { offset: 2, .. })
        ));
        assert!(matches!(parse(b""), Err(Error::Format { offset: 0, .. })));
        // largest 8-byte order with an empty body
        assert!(matches!(
            parse(b"~~~~~~~~"),
            Err(Error::Format { offset: 8, .. })
        ));
    }

    #[test]
    fn large_order_forms() {
        let g = Graph::cycle(63);
        let rec = encode(&g);
        assert_eq!(&rec[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(parse(&rec).unwrap(), g);
        let g = Graph::path(300);
        assert_eq!(parse(&encode(&g)).unwrap(), g);
    }
}
