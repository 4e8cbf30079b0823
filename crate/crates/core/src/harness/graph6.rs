//! graph6: `63 + n` (or `126` and three 6-bit digits for `63 <= n <= 64`),
//! then the upper triangle in column order `x(0,1), x(0,2), x(1,2), x(0,3), ..`
//! packed six bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line).as_bytes();
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = match body {
        [] => return Err(bad("empty record")),
        [126, 126, ..] => return Err(bad(format!("vertex count above {MAX_VERTICES}"))),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(bad("truncated vertex count")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(bad(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() < need {
        return Err(bad(format!(
            "expected {need} data bytes, found {}",
            rest.len()
        )));
    }
    if rest.len() > need {
        return Err(bad("trailing garbage after adjacency data"));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Parses newline-separated graph6 records, skipping blank lines. Each error
/// carries its 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| (k + 1, parse_graph6(l.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_known_records() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        // path 0-1-2: x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 -> 40 + 63
        assert_eq!(emit_graph6(&Graph::path(3)), "Bg");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("A ").is_err());
        assert!(parse_graph6("A\x7f").is_err());
        // K2 with a padding bit set
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("?").is_err());
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn large_vertex_counts() {
        for n in [62, 63, 64] {
            let g = Graph::path(n);
            let s = emit_graph6(&g);
            assert_eq!(s.as_bytes()[0] == 126, n >= 63);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
        let mut too_big = emit_graph6(&Graph::empty(64)).into_bytes();
        too_big[3] += 1;
        assert!(parse_graph6(std::str::from_utf8(&too_big).unwrap()).is_err());
    }

    #[test]
    fn multi_line_input() {
        let parsed = parse_graph6_lines(">>graph6<<A_\n\nC~\nbad\n");
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[1].0, 3);
        assert!(parsed[2].1.is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=20, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut x = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { edges.push((i, j)); }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = emit_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
