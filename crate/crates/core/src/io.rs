//! Graph text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column-major
//! order, six bits per printable byte (offset 63). The length header is one
//! byte for n <= 62, `~` plus three bytes for n <= 258047, `~~` plus six
//! bytes above that. Parse errors carry the byte offset they were detected
//! at.
//!
//! The edge list format is a vertex count on the first line followed by one
//! `u v` pair per line, zero-based.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 length header is truncated")]
    TruncatedHeader,
    #[error("graph6 data is truncated: expected {expected} data bytes, got {got}")]
    TruncatedData { expected: usize, got: usize },
    #[error("unexpected graph6 data starting at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final graph6 byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("edge list is missing the vertex count line")]
    MissingVertexCount,
    #[error("line {line}: expected `u v`, got {got} tokens")]
    EdgeTokenCount { line: usize, got: usize },
    #[error("line {line}: `{token}` is not a vertex number")]
    NonInteger { line: usize, token: String },
    #[error("line {line}: vertex {v} out of range for a graph on {n} vertices")]
    EdgeOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    EdgeSelfLoop { line: usize, v: usize },
}

fn g6_byte(s: &[u8], offset: usize) -> Result<u64, FormatError> {
    match s.get(offset) {
        None => Err(FormatError::TruncatedHeader),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(FormatError::InvalidByte { offset, byte: b }),
    }
}

/// Parses a one-line graph6 string. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim_end_matches(['\n', '\r']).as_bytes();
    if s.is_empty() {
        return Err(FormatError::Empty);
    }

    let (n, mut pos) = if s[0] == b'~' {
        if s.get(1) == Some(&b'~') {
            let mut n = 0u64;
            for i in 2..8 {
                n = n << 6 | g6_byte(s, i)?;
            }
            (n as usize, 8)
        } else {
            let mut n = 0u64;
            for i in 1..4 {
                n = n << 6 | g6_byte(s, i)?;
            }
            (n as usize, 4)
        }
    } else {
        (g6_byte(s, 0)? as usize, 1)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let data_bytes = bits.div_ceil(6);
    let got = s.len() - pos;
    if got < data_bytes {
        return Err(FormatError::TruncatedData {
            expected: data_bytes,
            got,
        });
    }
    if got > data_bytes {
        return Err(FormatError::TrailingData {
            offset: pos + data_bytes,
        });
    }

    let mut g = Graph::empty(n);
    let mut word = 0u64;
    let mut avail = 0usize;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                word = g6_byte(s, pos)?;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if word >> avail & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    // leftover low bits of the final byte must be zero padding
    if avail > 0 && word & ((1 << avail) - 1) != 0 {
        return Err(FormatError::NonzeroPadding { offset: pos - 1 });
    }
    Ok(g)
}

/// Writes the canonical graph6 encoding (shortest valid length header).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    }
    let mut word = 0u8;
    let mut used = 0usize;
    for v in 1..n {
        for u in 0..v {
            word = word << 1 | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(63 + word);
                word = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (word << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the `n` / `u v` edge list format. Blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut g = Graph::empty(0);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let parse = |token: &str| -> Result<usize, FormatError> {
            token.parse().map_err(|_| FormatError::NonInteger {
                line,
                token: token.to_string(),
            })
        };
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(FormatError::EdgeTokenCount {
                        line,
                        got: tokens.len(),
                    });
                }
                let count = parse(tokens[0])?;
                n = Some(count);
                g = Graph::empty(count);
            }
            Some(count) => {
                if tokens.len() != 2 {
                    return Err(FormatError::EdgeTokenCount {
                        line,
                        got: tokens.len(),
                    });
                }
                let u = parse(tokens[0])?;
                let v = parse(tokens[1])?;
                for w in [u, v] {
                    if w >= count {
                        return Err(FormatError::EdgeOutOfRange {
                            line,
                            v: w,
                            n: count,
                        });
                    }
                }
                if u == v {
                    return Err(FormatError::EdgeSelfLoop { line, v: u });
                }
                g.add_edge(u, v);
            }
        }
    }
    if n.is_none() {
        return Err(FormatError::MissingVertexCount);
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn known_encodings_decode() {
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);

        let e = parse_graph6("A_").unwrap();
        assert_eq!((e.n(), e.edge_count()), (2, 1));
        let e0 = parse_graph6("A?").unwrap();
        assert_eq!((e0.n(), e0.edge_count()), (2, 0));

        assert_eq!(parse_graph6("C~").unwrap(), k4());

        let d = parse_graph6("D??").unwrap();
        assert_eq!((d.n(), d.edge_count()), (5, 0));
    }

    #[test]
    fn known_encodings_encode() {
        assert_eq!(write_graph6(&k4()), "C~");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(5)), "D??");
        assert_eq!(
            write_graph6(&Graph::from_edges(2, &[(0, 1)]).unwrap()),
            "A_"
        );
    }

    #[test]
    fn long_header_round_trip() {
        // n = 63 forces the ~xyz header; 63 = 0,0,63 in base-64 digits
        let mut edges = Vec::new();
        for v in 1..63 {
            edges.push((v - 1, v));
        }
        let path = Graph::from_edges(63, &edges).unwrap();
        let text = write_graph6(&path);
        assert!(text.starts_with("~??~"));
        assert_eq!(parse_graph6(&text).unwrap(), path);
    }

    #[test]
    fn trailing_newline_tolerated() {
        assert_eq!(parse_graph6("C~\n").unwrap(), k4());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(
            parse_graph6(" C~"),
            Err(FormatError::InvalidByte {
                offset: 0,
                byte: b' '
            })
        );
        // 5-vertex header but only one of two data bytes
        assert_eq!(
            parse_graph6("D?"),
            Err(FormatError::TruncatedData {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            parse_graph6("C~~"),
            Err(FormatError::TrailingData { offset: 2 })
        );
        // K1 takes no data bytes at all
        assert_eq!(
            parse_graph6("@?"),
            Err(FormatError::TrailingData { offset: 1 })
        );
        assert_eq!(parse_graph6("~?"), Err(FormatError::TruncatedHeader));
        // n = 2 stores one matrix bit; the five pad bits must be zero.
        // '^' = 63 + 0b011111 sets the edge bit and every pad bit.
        assert_eq!(
            parse_graph6("A^"),
            Err(FormatError::NonzeroPadding { offset: 1 })
        );
        // a byte past the expected data region is trailing, valid or not
        assert_eq!(
            parse_graph6("C~\x7f"),
            Err(FormatError::TrailingData { offset: 2 })
        );
        assert_eq!(
            parse_graph6("B\x7f"),
            Err(FormatError::InvalidByte {
                offset: 1,
                byte: 0x7f
            })
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("4\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(write_edge_list(&g), "4\n0 1\n1 2\n2 3\n");
        // blank lines and stray spacing are fine
        let g2 = parse_edge_list("\n4\n\n0   1\n").unwrap();
        assert_eq!(g2.edges(), vec![(0, 1)]);
        // vertex count alone is an edgeless graph
        assert_eq!(parse_edge_list("2\n").unwrap().edge_count(), 0);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list(""), Err(FormatError::MissingVertexCount));
        assert_eq!(
            parse_edge_list("3\n0 x\n"),
            Err(FormatError::NonInteger {
                line: 2,
                token: "x".into()
            })
        );
        assert_eq!(
            parse_edge_list("3\n0 3\n"),
            Err(FormatError::EdgeOutOfRange { line: 2, v: 3, n: 3 })
        );
        assert_eq!(
            parse_edge_list("3\n1 1\n"),
            Err(FormatError::EdgeSelfLoop { line: 2, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3\n0 1 2\n"),
            Err(FormatError::EdgeTokenCount { line: 2, got: 3 })
        );
    }
}
