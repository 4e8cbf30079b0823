//! Canonical labeling by pruned permutation search.
//!
//! Vertices are first split into classes by iterated color refinement
//! (degree, then the multiset of neighbor colors, until stable). Classes are
//! ordered by their refined color, which depends only on the isomorphism
//! class. The search then tries every assignment of vertices to positions
//! that respects the classes and keeps the lexicographically smallest
//! upper-triangle bit string, abandoning a partial assignment once its prefix
//! exceeds the best one found so far. Of several interchangeable vertices
//! (equal neighborhoods apart from each other) only one is tried per
//! position.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::graph6::emit_graph6;

pub const DEFAULT_CANON_LIMIT: usize = 10;
/// Upper-triangle keys live in a `u128`, so at most 16 vertices.
pub const CANON_HARD_LIMIT: usize = 16;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonical relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub cert: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.cert).expect("graph6 is ASCII")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let c = canonical_graph_with_limit(g, limit)?;
    Ok(CanonicalForm {
        cert: emit_graph6(&c).into_bytes(),
    })
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_graph_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub(crate) fn canonical_graph_with_limit(g: &Graph, limit: usize) -> Result<Graph> {
    let limit = limit.min(CANON_HARD_LIMIT);
    if g.n() > limit {
        return Err(Error::CanonLimit { n: g.n(), limit });
    }
    let position_of = canonical_labeling(g);
    Ok(g.relabel(&position_of))
}

/// Stable color refinement starting from degrees. Colors are dense indices
/// into the sorted list of signatures, so they are labeling-independent.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colors = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Vertices allowed at each position.
    cells: Vec<VertexSet>,
    /// `twins[v]`: vertices whose neighborhood equals that of `v` up to `v`
    /// itself.
    twins: Vec<VertexSet>,
    total_bits: u32,
    perm: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: VertexSet, key: u128) {
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, self.perm.clone()));
            }
            return;
        }
        let prefix_bits = (pos * (pos + 1) / 2) as u32;
        let mut tried = VertexSet::EMPTY;
        for v in self.cells[pos].difference(used) {
            // swapping twins fixes every placed vertex, so their subtrees agree
            if tried.iter().any(|u| self.twins[u].contains(v)) {
                continue;
            }
            tried.insert(v);
            let mut column = 0u128;
            for (i, &u) in self.perm[..pos].iter().enumerate() {
                if self.g.has_edge(u, v) {
                    column |= 1 << (pos - 1 - i);
                }
            }
            let next = (key << pos) | column;
            if let Some((b, _)) = &self.best {
                let shift = self.total_bits - prefix_bits;
                if next > b >> shift {
                    continue;
                }
            }
            self.perm[pos] = v;
            let mut used = used;
            used.insert(v);
            self.run(pos + 1, used, next);
        }
    }
}

fn twin_sets(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            let mut nv = g.neighbors(v);
            nv.remove(v);
            (0..g.n())
                .filter(|&w| {
                    let mut a = nv;
                    a.remove(w);
                    let mut b = g.neighbors(w);
                    b.remove(v);
                    w != v && a == b
                })
                .collect()
        })
        .collect()
}

/// `result[v]` is the canonical position of vertex `v`.
fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let colors = refine_colors(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let cells = order
        .iter()
        .map(|&v| (0..n).filter(|&w| colors[w] == colors[v]).collect())
        .collect();
    let mut search = Search {
        g,
        cells,
        twins: twin_sets(g),
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        perm: vec![0; n],
        best: None,
    };
    search.run(0, VertexSet::EMPTY, 0);
    let (_, perm) = search.best.expect("at least one labeling");
    let mut position_of = vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        position_of[v] = pos;
    }
    position_of
}
