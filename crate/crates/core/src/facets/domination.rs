use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `N(P_Ĝ)` for the suspension `Ĝ` of `g`: the sum of `2^{c(g[S])}` over
/// nonempty dominating sets `S` of `g`.
pub fn count_suspension_via_domination(g: &Graph) -> u128 {
    let n = g.n();
    (1..1u128 << n)
        .map(|m| VertexSet(m as u64))
        .filter(|&s| g.is_dominating_set(s))
        .map(|s| 1u128 << g.component_count_within(s))
        .sum()
}

/// `Q(g; 1, 2) = Σ_{S ⊆ V} 2^{c(g[S])}`, counting the empty set once.
pub fn subgraph_component_value(g: &Graph) -> u128 {
    let n = g.n();
    (0..1u128 << n)
        .map(|m| 1u128 << g.component_count_within(VertexSet(m as u64)))
        .sum()
}
