//! Edge-list text: first record `n m`, then `m` records `i j` (0-based).
//! Records are separated by newlines, or by `;` in the inline form.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(msg: impl Into<String>) -> Error {
    Error::EdgeList(msg.into())
}

fn pair(record: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = record.split_whitespace().collect();
    match fields.as_slice() {
        [a, b] => {
            let a = a
                .parse()
                .map_err(|_| bad(format!("not an integer: {a:?}")))?;
            let b = b
                .parse()
                .map_err(|_| bad(format!("not an integer: {b:?}")))?;
            Ok((a, b))
        }
        _ => Err(bad(format!("expected two integers, got {record:?}"))),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut records = text
        .split(['\n', ';'])
        .map(str::trim)
        .filter(|r| !r.is_empty() && !r.starts_with('#'));
    let (n, m) = pair(records.next().ok_or_else(|| bad("missing header `n m`"))?)?;
    let edges = records.map(pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(bad(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (i, j) in edges {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

pub fn emit_inline_edges(g: &Graph) -> String {
    emit_edge_list(g).trim_end().replace('\n', ";")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_inline_and_file_forms() {
        let g = parse_edge_list("5 7;0 1;1 2;2 3;3 4;4 0;1 3;2 4").unwrap();
        assert_eq!(g.edge_count(), 7);
        let f = parse_edge_list("3 2\n0 1\n\n1 2\n").unwrap();
        assert_eq!(f, Graph::path(3));
        assert_eq!(parse_edge_list("1 0").unwrap(), Graph::empty(1));
        assert_eq!(emit_inline_edges(&Graph::path(3)), "3 2;0 1;1 2");
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_lists() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2;0 1").is_err());
        assert!(parse_edge_list("3 1;0 x").is_err());
        assert!(parse_edge_list("3 1;0 1 2").is_err());
        assert_eq!(parse_edge_list("3 1;1 1"), Err(Error::Loop(1)));
        assert!(parse_edge_list("3 1;0 3").is_err());
        assert!(parse_edge_list("0 0").is_err());
    }
}
