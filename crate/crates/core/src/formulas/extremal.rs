use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Named families attaining the conjectured bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalClass {
    Star,
    BalancedCompleteBipartite,
    OneSumOfTriangles,
    K4PlusTriangles,
    None,
}

impl ExtremalClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremalClass::Star => "star",
            ExtremalClass::BalancedCompleteBipartite => "balanced_complete_bipartite",
            ExtremalClass::OneSumOfTriangles => "one_sum_of_triangles",
            ExtremalClass::K4PlusTriangles => "k4_plus_triangles",
            ExtremalClass::None => "none",
        }
    }
}

impl std::fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sizes of the complete blocks of a connected graph, or `None` if some
/// block is not complete.
fn complete_block_sizes(g: &Graph) -> Option<Vec<usize>> {
    if g.n() < 2 || !g.is_connected() {
        return None;
    }
    g.blocks()
        .into_iter()
        .map(|b| {
            let size = b.len();
            let complete = b
                .iter()
                .all(|v| g.neighbors(v).intersection(b).len() == size - 1);
            complete.then_some(size)
        })
        .collect()
}

/// `K_{1,n-1}` with `n >= 2`.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() == n - 1 && !g.apexes().is_empty()
}

/// `K_{⌊n/2⌋,⌈n/2⌉}`.
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return false;
    }
    match g.bipartition() {
        Some((a, b)) => {
            let (x, y) = (a.len().min(b.len()), a.len().max(b.len()));
            x == n / 2 && y == n - n / 2 && g.edge_count() == x * y
        }
        None => false,
    }
}

/// Every block is a triangle.
pub fn is_one_sum_of_triangles(g: &Graph) -> bool {
    complete_block_sizes(g).is_some_and(|s| s.iter().all(|&k| k == 3))
}

/// One block is `K_4`, every other block a triangle.
pub fn is_k4_plus_triangles(g: &Graph) -> bool {
    complete_block_sizes(g).is_some_and(|s| {
        s.iter().filter(|&&k| k == 4).count() == 1 && s.iter().all(|&k| k == 3 || k == 4)
    })
}

/// Tags a connected graph with the extremal family it belongs to. Where
/// families overlap (`K_{1,2}`, `K_2`), the balanced complete bipartite tag
/// wins over the star tag.
pub fn classify_extremal(g: &Graph) -> ExtremalClass {
    if is_one_sum_of_triangles(g) {
        ExtremalClass::OneSumOfTriangles
    } else if is_k4_plus_triangles(g) {
        ExtremalClass::K4PlusTriangles
    } else if is_balanced_complete_bipartite(g) {
        ExtremalClass::BalancedCompleteBipartite
    } else if is_star(g) {
        ExtremalClass::Star
    } else {
        ExtremalClass::None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_named_graphs() {
        assert_eq!(classify_extremal(&Graph::star(4)), ExtremalClass::Star);
        let bowtie = Graph::complete(3)
            .one_sum(0, &Graph::complete(3), 0)
            .unwrap();
        assert_eq!(classify_extremal(&bowtie), ExtremalClass::OneSumOfTriangles);
        assert_eq!(classify_extremal(&Graph::cycle(5)), ExtremalClass::None);
        assert_eq!(
            classify_extremal(&Graph::complete_bipartite(2, 3)),
            ExtremalClass::BalancedCompleteBipartite
        );
        assert_eq!(
            classify_extremal(&Graph::complete_bipartite(3, 3)),
            ExtremalClass::BalancedCompleteBipartite
        );
        assert_eq!(
            classify_extremal(&Graph::complete(4)),
            ExtremalClass::K4PlusTriangles
        );
        assert_eq!(
            classify_extremal(&Graph::complete(3)),
            ExtremalClass::OneSumOfTriangles
        );
        let k4t = Graph::complete(4)
            .one_sum(3, &Graph::complete(3), 0)
            .unwrap();
        assert_eq!(classify_extremal(&k4t), ExtremalClass::K4PlusTriangles);
        assert_eq!(
            classify_extremal(&Graph::path(3)),
            ExtremalClass::BalancedCompleteBipartite
        );
        assert!(is_star(&Graph::path(3)));
        assert_eq!(
            classify_extremal(&Graph::complete_bipartite(1, 4)),
            ExtremalClass::Star
        );
        assert_eq!(
            classify_extremal(&Graph::complete_bipartite(2, 4)),
            ExtremalClass::None
        );
        assert_eq!(classify_extremal(&Graph::empty(3)), ExtremalClass::None);
    }

    #[test]
    fn chained_triangles() {
        let t = Graph::complete(3);
        let chain = t.one_sum(2, &t, 0).unwrap().one_sum(4, &t, 0).unwrap();
        assert_eq!(chain.n(), 7);
        assert!(is_one_sum_of_triangles(&chain));
        let two_k4 = Graph::complete(4)
            .one_sum(0, &Graph::complete(4), 0)
            .unwrap();
        assert!(!is_k4_plus_triangles(&two_k4));
        // triangle with a pendant edge has a K2 block
        let paw = t.one_sum(0, &Graph::complete(2), 0).unwrap();
        assert_eq!(classify_extremal(&paw), ExtremalClass::None);
    }

    #[test]
    fn serde_tags() {
        assert_eq!(
            serde_json::to_string(&ExtremalClass::K4PlusTriangles).unwrap(),
            "\"k4_plus_triangles\""
        );
        assert_eq!(
            ExtremalClass::BalancedCompleteBipartite.to_string(),
            "balanced_complete_bipartite"
        );
    }
}
