use serde::{Deserialize, Serialize};

use super::{bfs_tree, require_connected};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::vertex_set::VertexSet;

/// A facet subgraph: a bipartition of `V` whose crossing edges form a
/// connected spanning subgraph, with its multiplicity `mu`. Vertex 0 is
/// always in `part1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacetSubgraph {
    pub part1: VertexSet,
    pub part2: VertexSet,
    pub cross_edges: Vec<Edge>,
    pub mu: u128,
}

impl FacetSubgraph {
    /// Edges of the source graph inside one side; contracting these yields
    /// the bipartite quotient.
    pub fn removed_edges(&self, g: &Graph) -> Vec<Edge> {
        g.edges()
            .into_iter()
            .filter(|&(i, j)| self.part1.contains(i) == self.part1.contains(j))
            .collect()
    }

    pub fn quotient(&self, g: &Graph) -> Result<Graph> {
        g.contract_edges(&self.removed_edges(g))
    }
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr(Vec<usize>);

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VertexSetRepr(self.iter().collect()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let VertexSetRepr(vs) = VertexSetRepr::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// True iff the edges between `part1` and `part2 = V \ part1` connect every
/// vertex.
#[inline]
fn crossing_connected(g: &Graph, part2: VertexSet) -> bool {
    let part1 = g.vertices().difference(part2);
    let mut seen = VertexSet::singleton(0);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            let other = if part2.contains(v) { part1 } else { part2 };
            next = next.union(g.neighbors(v).intersection(other));
        }
        frontier = next.difference(seen);
        seen = seen.union(frontier);
    }
    seen == g.vertices()
}

/// Second parts of every facet subgraph of a connected `g`, ascending.
fn facet_cuts(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    let n = g.n();
    (1..1u64 << (n - 1))
        .map(|m| VertexSet(m << 1))
        .filter(move |&part2| crossing_connected(g, part2))
}

fn mu_for_cut(g: &Graph, part2: VertexSet) -> Result<u128> {
    let inside: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(i, j)| part2.contains(i) == part2.contains(j))
        .collect();
    count_bipartite_strict(&g.contract_edges(&inside)?)
}

/// All facet subgraphs of a connected graph, ordered by `part2` bitmask.
pub fn enumerate_facet_subgraphs(g: &Graph) -> Result<Vec<FacetSubgraph>> {
    require_connected(g)?;
    facet_cuts(g)
        .map(|part2| {
            let part1 = g.vertices().difference(part2);
            let cross_edges = g
                .edges()
                .into_iter()
                .filter(|&(i, j)| part2.contains(i) != part2.contains(j))
                .collect();
            Ok(FacetSubgraph {
                part1,
                part2,
                cross_edges,
                mu: mu_for_cut(g, part2)?,
            })
        })
        .collect()
}

/// `μ(H)`: the number of facets whose facet subgraph is `h`.
pub fn mu_of(g: &Graph, h: &FacetSubgraph) -> Result<u128> {
    require_connected(g)?;
    let all = g.vertices();
    let valid = h.part1.union(h.part2) == all
        && h.part1.intersection(h.part2).is_empty()
        && h.part1.contains(0)
        && !h.part2.is_empty()
        && crossing_connected(g, h.part2)
        && h.cross_edges
            == g.edges()
                .into_iter()
                .filter(|&(i, j)| h.part2.contains(i) != h.part2.contains(j))
                .collect::<Vec<_>>();
    if !valid {
        return Err(Error::NotFacetSubgraph);
    }
    mu_for_cut(g, h.part2)
}

/// `N(P_G)` as the sum of `μ(H)` over facet subgraphs.
pub fn count_facets(g: &Graph) -> Result<u128> {
    require_connected(g)?;
    let mut total: u128 = 0;
    for part2 in facet_cuts(g) {
        total = total
            .checked_add(mu_for_cut(g, part2)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Number of labelings `f` of a connected bipartite graph with `f(0) = 0` and
/// `|f(i) - f(j)| = 1` on every edge.
///
/// Each spanning-tree edge gets a sign; partial assignments are dropped as
/// soon as an already-labeled non-tree edge has a difference other than ±1.
pub fn count_bipartite_strict(b: &Graph) -> Result<u128> {
    require_connected(b)?;
    if !b.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let (order, parent) = bfs_tree(b);
    let mut values = vec![0i64; b.n()];
    let mut placed = VertexSet::singleton(0);
    Ok(count_signs(b, &order, &parent, 1, &mut values, &mut placed))
}

fn count_signs(
    b: &Graph,
    order: &[usize],
    parent: &[usize],
    depth: usize,
    values: &mut [i64],
    placed: &mut VertexSet,
) -> u128 {
    if depth == order.len() {
        return 1;
    }
    let v = order[depth];
    let earlier = b.neighbors(v).intersection(*placed);
    let mut total = 0;
    placed.insert(v);
    for d in [-1, 1] {
        let x = values[parent[v]] + d;
        if earlier.iter().all(|w| (values[w] - x).abs() == 1) {
            values[v] = x;
            total += count_signs(b, order, parent, depth + 1, values, placed);
        }
    }
    placed.remove(v);
    total
}
