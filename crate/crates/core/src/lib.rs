//! Exact facet counts of symmetric edge polytopes.
//!
//! The symmetric edge polytope of a graph `G` is the convex hull of
//! `±(e_i - e_j)` over the edges `{i, j}`. For connected `G` on `n` vertices it
//! is a centrally symmetric reflexive polytope of dimension `n - 1`. This crate
//! counts its facets by several independent routes that check one another:
//!
//! * [`facets::enumerate_facets_oracle`] enumerates the integer labelings that
//!   define facets.
//! * [`facets::count_facets`] sums multiplicities over facet subgraphs
//!   (connected cuts).
//! * [`facets::count_suspension_via_domination`] counts facets of a suspension
//!   from the dominating sets of its base graph.
//! * [`formulas`] holds the closed forms, bounds and recursion identities.
//!
//! [`harness`] generates small graphs up to isomorphism, reads and writes
//! graph6, and runs exhaustive verification sweeps.

pub mod error;
pub mod facets;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod vertex_set;

pub use error::{Error, Result};
pub use facets::{
    count_bipartite_strict, count_facets, count_suspension_via_domination,
    enumerate_facet_subgraphs, enumerate_facets_oracle, mu_of, subgraph_component_value,
    FacetFunction, FacetSubgraph,
};
pub use graph::{Edge, Graph, MAX_VERTICES};
pub use vertex_set::VertexSet;
