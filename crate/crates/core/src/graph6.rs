//! graph6 text encoding.
//!
//! The size field is one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three 6-bit bytes. The upper triangle follows column by
//! column, `(0,1), (0,2), (1,2), (0,3), ..`, six bits per byte, most
//! significant first, each byte offset by 63.

use crate::error::FormatError;
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored; padding bits must be zero.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let trimmed_start = line.len() - line.trim_start().len();
    let mut body = line.trim();
    let mut base = trimmed_start;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::new(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::new(base + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let (n, mut pos) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == b'~' {
        if bytes.len() < 8 {
            return Err(FormatError::new(base + bytes.len(), "truncated 8-byte size field"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(FormatError::new(base + bytes.len(), "truncated 4-byte size field"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(FormatError::new(base, format!("{n} vertices; at most {MAX_VERTICES} supported")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(FormatError::new(
            base + bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += k.div_ceil(6);
    if k % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(FormatError::new(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses every non-empty line; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, FormatError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("C~").unwrap(), named::complete(4));
        assert_eq!(emit_graph6(&named::complete(4)), "C~");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        // Petersen in its usual labeling
        assert_eq!(emit_graph6(&named::petersen()).len(), 9);
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), named::complete(4));
        // P3 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 -> 40+63
        assert_eq!(emit_graph6(&named::path(3)), "Bg");
    }

    #[test]
    fn large_size_field() {
        let g = named::cycle(64);
        let s = emit_graph6(&g);
        // 64 = 1 * 2^6 in three 6-bit digits: 0, 1, 0
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = named::path(63);
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        let e = parse_graph6("").unwrap_err();
        assert_eq!(e.offset, 0);
        let e = parse_graph6("C~~").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_graph6("C").unwrap_err();
        assert_eq!(e.offset, 1);
        let e = parse_graph6("C}\u{7f}").unwrap_err();
        assert_eq!(e.offset, 2);
        // 3 vertices use 3 of 6 bits; low bits must be clear
        let e = parse_graph6("Bh").unwrap_err();
        assert_eq!(e.offset, 1);
        assert!(parse_graph6("~?@?").is_err());
        assert!(parse_graph6("~~").is_err());
    }

    #[test]
    fn line_parsing() {
        let gs = parse_graph6_lines("C~\n\nBg\n").unwrap();
        assert_eq!(gs.len(), 2);
        let (line, _) = parse_graph6_lines("C~\nC\n").unwrap_err();
        assert_eq!(line, 2);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(emit_graph6(&back), s);
        }
    }
}
