//! Facet counting for symmetric edge polytopes.
//!
//! A facet corresponds to an integer labeling `f` of the vertices such that
//! adjacent labels differ by at most one and the edges whose labels differ by
//! exactly one form a connected spanning subgraph. Labelings are normalized
//! with `f(0) = 0`; the polytope lies in the hyperplane `Σ x_i = 0`, so adding
//! a constant to `f` gives the same facet.
//!
//! Three routes compute the count:
//!
//! * [`enumerate_facets_oracle`]: every labeling, found by choosing a
//!   difference in `{-1, 0, 1}` along each spanning-tree edge.
//! * [`count_facets`]: the sum of `μ(H)` over facet subgraphs `H`, i.e. over
//!   vertex bipartitions whose crossing edges connect every vertex; `μ(H)` is
//!   the strict-labeling count of the bipartite quotient obtained by contracting
//!   the non-crossing edges.
//! * [`count_suspension_via_domination`]: for a suspension, facet subgraphs are
//!   the dominating sets `S` of the base graph, each with `μ = 2^{c(G[S])}`.

mod domination;
mod oracle;
mod subgraphs;

pub use domination::{count_suspension_via_domination, subgraph_component_value};
pub use oracle::{enumerate_facets_oracle, FacetFunction};
pub use subgraphs::{
    count_bipartite_strict, count_facets, enumerate_facet_subgraphs, mu_of, FacetSubgraph,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Facet counts are only defined here for connected graphs with an edge.
pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooSmall);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Vertices of `g` in BFS order from 0, with each non-root vertex's BFS
/// parent. `g` must be connected.
pub(crate) fn bfs_tree(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = crate::VertexSet::singleton(0);
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for w in g.neighbors(u).difference(seen) {
            seen.insert(w);
            parent[w] = u;
            order.push(w);
        }
    }
    (order, parent)
}
