//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),..., packed
//! big-endian into 6-bit groups, each offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn edge_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_HEADER).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#04x} outside [63,126]")));
        }
    }
    let (n, header_len) = match bytes.first() {
        None => return Err(parse_err(0, "empty input")),
        Some(&LONG_HEADER) => {
            if bytes.len() < 4 {
                return Err(parse_err(bytes.len(), "truncated long-form header"));
            }
            if bytes[1] == LONG_HEADER {
                return Err(parse_err(1, "8-byte headers are not supported"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
            (n, 4)
        }
        Some(&b) => ((b - OFFSET) as usize, 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(parse_err(0, format!("vertex count {n} outside 1..=64")));
    }
    if header_len == 4 && n <= 62 {
        return Err(parse_err(0, "long-form header used for n <= 62"));
    }
    let expected = header_len + edge_bytes(n);
    if bytes.len() < expected {
        return Err(parse_err(
            bytes.len(),
            format!("expected {expected} bytes, found {}", bytes.len()),
        ));
    }
    if bytes.len() > expected {
        return Err(parse_err(expected, "trailing bytes after graph"));
    }

    let mut g = Graph::empty(n)?;
    let body = &bytes[header_len..];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = body[k / 6] - OFFSET;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[body.len() - 1] - OFFSET;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(parse_err(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + edge_bytes(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(write_graph6(&p4), "Ch");
        assert_eq!(parse_graph6("Ch").unwrap(), p4);

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(write_graph6(&k1), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);

        assert_eq!(write_graph6(&Graph::complete(2).unwrap()), "A_");
    }

    #[test]
    fn petgraph_fixture() {
        // A-C, A-E, B-D, D-E on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        // out of range byte
        assert!(matches!(
            parse_graph6("C~ "),
            Err(Error::Parse { offset: 2, .. })
        ));
        // truncated
        assert!(matches!(parse_graph6("D"), Err(Error::Parse { offset: 1, .. })));
        // trailing garbage
        assert!(matches!(parse_graph6("C~~"), Err(Error::Parse { offset: 2, .. })));
        // n=3 uses only the top 3 bits of the group; 'x' sets a padding bit
        assert!(matches!(parse_graph6("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("?"), Err(Error::Parse { .. })));
    }

    #[test]
    fn long_form_header() {
        let g = Graph::cycle(64).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = write_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph6(&back), s);
            prop_assert_eq!(g.degrees().iter().sum::<usize>() % 2, 0);
        }
    }
}
