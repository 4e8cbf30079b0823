use serde::{Deserialize, Serialize};

use super::{bfs_tree, require_connected};
use crate::error::Result;
use crate::graph::{Edge, Graph};
use crate::vertex_set::VertexSet;

/// Normalized facet-defining labeling, `values[0] == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacetFunction {
    pub values: Vec<i64>,
}

impl FacetFunction {
    pub fn new(values: Vec<i64>) -> Self {
        FacetFunction { values }
    }

    /// Edges whose labels differ by exactly one.
    pub fn strict_edges(&self, g: &Graph) -> Vec<Edge> {
        g.edges()
            .into_iter()
            .filter(|&(i, j)| (self.values[i] - self.values[j]).abs() == 1)
            .collect()
    }

    /// Checks both facet conditions against `g`, for any gauge.
    pub fn defines_facet_of(&self, g: &Graph) -> bool {
        if self.values.len() != g.n() {
            return false;
        }
        let f = &self.values;
        if g.edges().iter().any(|&(i, j)| (f[i] - f[j]).abs() > 1) {
            return false;
        }
        strict_graph_connected(g, f)
    }

    pub fn negated(&self) -> FacetFunction {
        FacetFunction::new(self.values.iter().map(|v| -v).collect())
    }

    /// Shifts the labeling so that vertex 0 has label 0.
    pub fn normalized(&self) -> FacetFunction {
        let base = self.values.first().copied().unwrap_or(0);
        FacetFunction::new(self.values.iter().map(|v| v - base).collect())
    }

    /// Bipartition of the facet subgraph: vertices with the parity of `f(0)`
    /// first.
    pub fn cut(&self) -> (VertexSet, VertexSet) {
        let base = self.values[0];
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for (v, &x) in self.values.iter().enumerate() {
            if (x - base).rem_euclid(2) == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        (a, b)
    }
}

fn strict_graph_connected(g: &Graph, f: &[i64]) -> bool {
    let n = g.n();
    let mut seen = VertexSet::singleton(0);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if !seen.contains(w) && (f[u] - f[w]).abs() == 1 {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen.len() == n
}

/// Every facet of `P_G` as a normalized labeling, sorted.
///
/// Walks a BFS spanning tree, giving each tree edge a label difference in
/// `{-1, 0, 1}`; partial labelings violating `|f(i) - f(j)| <= 1` on an
/// already-labeled edge are cut off early, and complete ones are kept when
/// their strict edges connect every vertex.
pub fn enumerate_facets_oracle(g: &Graph) -> Result<Vec<FacetFunction>> {
    require_connected(g)?;
    let (order, parent) = bfs_tree(g);
    let mut values = vec![0i64; g.n()];
    let mut out = Vec::new();
    extend(g, &order, &parent, 1, &mut values, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

fn extend(
    g: &Graph,
    order: &[usize],
    parent: &[usize],
    depth: usize,
    values: &mut Vec<i64>,
    out: &mut Vec<FacetFunction>,
) {
    if depth == order.len() {
        if strict_graph_connected(g, values) {
            out.push(FacetFunction::new(values.clone()));
        }
        return;
    }
    let v = order[depth];
    let placed: VertexSet = order[..depth].iter().copied().collect();
    let earlier = g.neighbors(v).intersection(placed);
    for d in [-1, 0, 1] {
        let x = values[parent[v]] + d;
        if earlier.iter().all(|w| (values[w] - x).abs() <= 1) {
            values[v] = x;
            extend(g, order, parent, depth + 1, values, out);
        }
    }
    values[v] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn small_complete_graphs() {
        let k2 = enumerate_facets_oracle(&Graph::complete(2)).unwrap();
        assert_eq!(
            k2,
            vec![
                FacetFunction::new(vec![0, -1]),
                FacetFunction::new(vec![0, 1])
            ]
        );
        assert_eq!(
            enumerate_facets_oracle(&Graph::complete(3)).unwrap().len(),
            6
        );
        assert_eq!(
            enumerate_facets_oracle(&Graph::complete(4)).unwrap().len(),
            14
        );
    }

    #[test]
    fn rejects_disconnected_and_trivial() {
        assert_eq!(
            enumerate_facets_oracle(&Graph::empty(3)),
            Err(Error::Disconnected)
        );
        assert_eq!(
            enumerate_facets_oracle(&Graph::empty(1)),
            Err(Error::TooSmall)
        );
    }

    #[test]
    fn every_output_is_a_normalized_facet() {
        let g = Graph::cycle(5).suspension().unwrap();
        for f in enumerate_facets_oracle(&g).unwrap() {
            assert_eq!(f.values[0], 0);
            assert!(f.defines_facet_of(&g));
        }
    }

    #[test]
    fn gauge_shift_preserves_conditions() {
        let g = Graph::complete(4).one_sum(0, &Graph::cycle(4), 0).unwrap();
        for f in enumerate_facets_oracle(&g).unwrap() {
            for c in [-3, 1, 7] {
                let shifted = FacetFunction::new(f.values.iter().map(|v| v + c).collect());
                assert!(shifted.defines_facet_of(&g));
                assert_eq!(shifted.normalized(), f);
            }
        }
        let not_facet = FacetFunction::new(vec![0, 2, 0, 0, 0, 0, 0]);
        assert!(!not_facet.defines_facet_of(&g));
    }

    #[test]
    fn central_symmetry() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)])
            .unwrap();
        let facets = enumerate_facets_oracle(&g).unwrap();
        assert_eq!(facets.len() % 2, 0);
        for f in &facets {
            assert!(facets.binary_search(&f.negated()).is_ok());
        }
    }

    /// Distinct normalized labelings give distinct supporting hyperplanes
    /// `<f, x> = 1`: their value vectors on the generators `±(e_i - e_j)`
    /// differ.
    #[test]
    fn normalized_labelings_are_distinct_hyperplanes() {
        let g = Graph::complete(3).join(&Graph::empty(2)).unwrap();
        let facets = enumerate_facets_oracle(&g).unwrap();
        let mut signatures: Vec<Vec<i64>> = facets
            .iter()
            .map(|f| {
                g.edges()
                    .iter()
                    .flat_map(|&(i, j)| {
                        let d = f.values[i] - f.values[j];
                        [d, -d]
                    })
                    .collect()
            })
            .collect();
        // each facet touches at least one generator at level 1
        assert!(signatures.iter().all(|s| s.contains(&1)));
        signatures.sort();
        signatures.dedup();
        assert_eq!(signatures.len(), facets.len());
    }

    #[test]
    fn cut_is_the_parity_classes() {
        let f = FacetFunction::new(vec![0, 1, -1, 2, 0]);
        let (a, b) = f.cut();
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 3, 4]);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![1, 2]);
    }
}
