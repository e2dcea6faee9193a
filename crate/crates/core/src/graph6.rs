//! graph6 encoding.
//!
//! Each byte is `63 + x` for a 6-bit chunk `x`. The header encodes `n` (a
//! single byte for `n < 63`, otherwise `~` followed by three bytes), then the
//! upper triangle of the adjacency matrix is emitted column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), most significant bit first, padded
//! with zeros to a multiple of six.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(BIAS + n as u8);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` header are stripped; byte offsets in errors refer to the
/// remaining text.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(pos, format!("byte 0x{:02x} outside 0x3F-0x7E", bytes[pos])));
    }
    if bytes.is_empty() {
        return Err(parse_err(0, "missing length header"));
    }
    let (n, body_start) = if bytes[0] != b'~' {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated length header"));
        }
        if bytes[1] == b'~' {
            return Err(parse_err(1, "graphs with more than 258047 vertices are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n < 63 {
            return Err(parse_err(0, format!("non-canonical long header for n={n}")));
        }
        (n, 4)
    };
    if n == 0 {
        return Err(parse_err(0, "graph with zero vertices"));
    }
    let pairs = n * (n - 1) / 2;
    let needed = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != needed {
        return Err(parse_err(
            body_start + body.len().min(needed),
            format!("expected {needed} data bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[needed - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(body_start + needed - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses every non-empty line of a multi-line graph6 document.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn k4_decodes() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn invalid_byte_reports_offset() {
        match parse_graph6("garbage\x01") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_length_rejected() {
        assert!(matches!(parse_graph6("C~~"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Parse { .. })));
    }

    #[test]
    fn nonzero_padding_rejected() {
        // n = 3 has 3 data bits; the low 3 bits of the byte must be zero.
        assert!(parse_graph6("B_").is_ok());
        assert!(matches!(parse_graph6("B`"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::empty(63).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
