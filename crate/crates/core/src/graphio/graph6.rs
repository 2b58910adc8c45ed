//! graph6 encoding (McKay's format): a size prefix followed by the upper
//! triangle of the adjacency matrix, column by column, six bits per byte.

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 1 << 16;

const HEADER: &str = ">>graph6<<";

pub fn from_graph6(text: &str) -> Result<Graph> {
    from_graph6_with_limit(text, DEFAULT_MAX_ORDER)
}

pub fn from_graph6_with_limit(text: &str, max_order: usize) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (start, bytes) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, body.as_bytes()),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(start + i, format!("byte 0x{b:02x} outside the graph6 range")));
        }
    }
    let (n, consumed) = decode_order(bytes, start)?;
    if n > max_order {
        return Err(Error::Size { n, max: max_order });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[consumed..];
    if data.len() < need {
        return Err(Error::parse(start + bytes.len(), format!("truncated: expected {need} data bytes, found {}", data.len())));
    }
    if data.len() > need {
        return Err(Error::parse(start + consumed + need, "trailing bytes after graph data"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(start + consumed + need - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let word = |from: usize, len: usize| -> Result<usize> {
        if bytes.len() < from + len {
            return Err(Error::parse(start + bytes.len(), "truncated size prefix"));
        }
        Ok(bytes[from..from + len]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    match bytes.first() {
        None => Err(Error::parse(start, "empty graph6 string")),
        Some(&b) if b < 126 => Ok(((b - 63) as usize, 1)),
        Some(_) if bytes.get(1) == Some(&126) => Ok((word(2, 6)?, 8)),
        Some(_) => Ok((word(1, 3)?, 4)),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphio::corpus;
    use proptest::prelude::*;

    #[test]
    fn small_strings() {
        let k2 = from_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let k1 = from_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(to_graph6(&k1), "@");
        assert_eq!(to_graph6(&Graph::empty(3)), "B?");
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap().size(), 1);
    }

    #[test]
    fn five_vertex_reference() {
        // edges 0-2, 0-4, 1-3, 3-4 encode to "DQc"
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert!(from_graph6("DQc").unwrap().same_adjacency(&g));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(from_graph6("D"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(from_graph6("A_x"), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("A "), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6("A`"), Err(Error::Parse { .. })), "padding bits must be zero");
        assert!(matches!(from_graph6("~?@"), Err(Error::Parse { .. })));
        assert_eq!(from_graph6_with_limit("D??", 4), Err(Error::Size { n: 5, max: 4 }));
    }

    #[test]
    fn long_form_order() {
        let g = Graph::empty(63);
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap().order(), 63);
    }

    #[test]
    fn corpus_round_trips() {
        for name in corpus::corpus_names() {
            let g = corpus::corpus(name).unwrap();
            let back = from_graph6(&to_graph6(&g)).unwrap();
            assert!(back.same_adjacency(&g), "{name}");
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 0usize..80, bits in prop::collection::vec(any::<bool>(), 3200)) {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k % bits.len()] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            let back = from_graph6(&to_graph6(&g)).unwrap();
            prop_assert!(back.same_adjacency(&g));
        }
    }
}
