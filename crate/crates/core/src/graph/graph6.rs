//! graph6 encoding of undirected simple graphs.
//!
//! The size header is `63 + n` for `n < 63`, or `126` followed by three
//! (or `126 126` followed by six) 6-bit groups. The body packs the upper
//! triangle of the adjacency matrix column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) six bits per byte, most significant bit first, each
//! byte offset by 63 and the final byte padded with zero bits.

use thiserror::Error;

use super::{Graph, GraphError};

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed size header")]
    BadHeader,
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the last byte")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sixbits(offset: usize, byte: u8) -> Result<u64, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(u64::from(byte - 63))
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Decodes one graph; surrounding whitespace and the optional `>>graph6<<`
/// header are ignored.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = input.trim_ascii();
    if let Some(rest) = bytes.strip_prefix(HEADER) {
        bytes = rest;
    }
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };

    let (n, header_len) = if first != 126 {
        (sixbits(0, first)? as usize, 1)
    } else {
        let groups = if bytes.get(1) == Some(&126) { 6 } else { 3 };
        let start = if groups == 6 { 2 } else { 1 };
        if bytes.len() < start + groups {
            return Err(Graph6Error::BadHeader);
        }
        let mut n = 0u64;
        for (i, &b) in bytes[start..start + groups].iter().enumerate() {
            n = (n << 6) | sixbits(start + i, b)?;
        }
        (n as usize, start + groups)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let values = body
        .iter()
        .enumerate()
        .map(|(i, &b)| sixbits(header_len + i, b))
        .collect::<Result<Vec<_>, _>>()?;
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Encodes `g` without header or trailing newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn k4() {
        // 4 vertices -> 'C'; six edge bits all set -> 63 + 0b111111 = '~'
        let g = parse_graph6(b"C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
        assert_eq!(write_graph6(&g), b"C~");
    }

    #[test]
    fn hand_encoded_path() {
        // P3 = 0-1-2: bits x(0,1)=1 x(0,2)=0 x(1,2)=1 -> 101000 = 40 -> 'g'
        let g = parse_graph6(b"Bg").unwrap();
        assert_eq!(g.edges(), Graph::new(3, [(0, 1), (1, 2)]).unwrap().edges());
    }

    #[test]
    fn header_and_whitespace() {
        let g = parse_graph6(b">>graph6<<C~\n").unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b"!~"),
            Err(Graph6Error::InvalidByte {
                offset: 0,
                byte: b'!'
            })
        );
        assert!(matches!(
            parse_graph6(b"C~~"),
            Err(Graph6Error::BadLength { .. })
        ));
        // P3 with a padding bit set
        assert_eq!(parse_graph6(b"Bh"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(parse_graph6(&[126, 63]), Err(Graph6Error::BadHeader));
    }

    #[test]
    fn extended_size_round_trip() {
        let g = Graph::cycle(70).unwrap();
        let bytes = write_graph6(&g);
        assert_eq!(bytes[0], 126);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn bundled_files_parse() {
        assert_eq!(data::petersen().m(), 15);
        assert_eq!(data::heawood().m(), 21);
        assert_eq!(data::tutte_coxeter().m(), 45);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trip(n in 0usize..80, seed in any::<u64>()) {
                let mut state = seed | 1;
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 5 == 0 {
                            edges.push((i, j));
                        }
                    }
                }
                let g = Graph::new(n, edges).unwrap();
                prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
            }
        }
    }
}
