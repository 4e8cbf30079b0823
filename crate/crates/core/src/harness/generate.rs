//! Isomorph-free generation of small graphs by vertex extension.
//!
//! Every graph on `k` vertices arises from some graph on `k - 1` vertices by
//! adding a vertex with an arbitrary neighborhood, so extending one
//! representative per class in every possible way and deduplicating by
//! canonical form reaches every class on `k` vertices.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::canonical_graph_with_limit;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_GENERATOR_LIMIT: usize = 7;

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, connected or not, in ascending graph6 order.
pub fn generate_all(n: usize) -> Result<Vec<Graph>> {
    generate_all_with_limit(n, DEFAULT_GENERATOR_LIMIT)
}

pub fn generate_all_with_limit(n: usize, limit: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > limit {
        return Err(Error::GeneratorLimit { n, limit });
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        level = extend(&level, k, limit)?;
    }
    Ok(level)
}

/// Connected classes only; counts are 1, 1, 2, 6, 21, 112, 853 for n = 1..7.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    generate_connected_with_limit(n, DEFAULT_GENERATOR_LIMIT)
}

pub fn generate_connected_with_limit(n: usize, limit: usize) -> Result<Vec<Graph>> {
    Ok(generate_all_with_limit(n, limit)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

fn extend(level: &[Graph], k: usize, limit: usize) -> Result<Vec<Graph>> {
    let per_parent: Vec<Result<Vec<(String, Graph)>>> = level
        .par_iter()
        .map(|g| {
            (0..1u64 << (k - 1))
                .map(|mask| {
                    let mut rows = g.rows().to_vec();
                    let nb = VertexSet(mask);
                    for v in nb {
                        rows[v].insert(k - 1);
                    }
                    rows.push(nb);
                    let c = canonical_graph_with_limit(&Graph::from_rows(rows)?, limit)?;
                    Ok((super::emit_graph6(&c), c))
                })
                .collect()
        })
        .collect();
    let mut classes = BTreeMap::new();
    for batch in per_parent {
        classes.extend(batch?);
    }
    Ok(classes.into_values().collect())
}
