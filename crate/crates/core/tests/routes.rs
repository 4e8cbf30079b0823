use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use sep_core::formulas::{formula_count, n_one_sum};
use sep_core::{
    count_facets, count_suspension_via_domination, enumerate_facet_subgraphs,
    enumerate_facets_oracle, subgraph_component_value, Graph,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected, n >= 2", |g| g.n() >= 2 && g.is_connected())
}

#[test]
fn example_quotients() {
    let g =
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)]).unwrap();
    let mut shapes: Vec<(usize, usize, u128)> = enumerate_facet_subgraphs(&g)
        .unwrap()
        .iter()
        .map(|h| {
            let q = h.quotient(&g).unwrap();
            (q.n(), q.edge_count(), h.mu)
        })
        .collect();
    shapes.sort();
    assert_eq!(
        shapes,
        [
            (2, 1, 2),
            (2, 1, 2),
            (2, 1, 2),
            (2, 1, 2),
            (3, 2, 4),
            (3, 2, 4),
            (4, 4, 6)
        ]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_matches_decomposition(g in connected_strategy(7)) {
        let facets = enumerate_facets_oracle(&g).unwrap();
        prop_assert_eq!(facets.len() as u128, count_facets(&g).unwrap());
        for f in &facets {
            prop_assert!(f.defines_facet_of(&g));
            prop_assert!(facets.contains(&f.negated().normalized()));
        }
    }

    #[test]
    fn domination_matches_suspension(g in graph_strategy(6)) {
        let direct = count_facets(&g.suspension().unwrap()).unwrap();
        prop_assert_eq!(count_suspension_via_domination(&g), direct);
        prop_assert!(direct <= subgraph_component_value(&g));
    }

    #[test]
    fn one_sums_multiply(a in connected_strategy(4), b in connected_strategy(4), v in 0usize..4, w in 0usize..4) {
        let (v, w) = (v % a.n(), w % b.n());
        let g = a.one_sum(v, &b, w).unwrap();
        let product = n_one_sum(count_facets(&a).unwrap(), count_facets(&b).unwrap()).unwrap();
        prop_assert_eq!(count_facets(&g).unwrap(), product);
    }

    #[test]
    fn counts_survive_relabeling(g in connected_strategy(7), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(count_facets(&g).unwrap(), count_facets(&h).unwrap());
        prop_assert_eq!(formula_count(&g).ok(), formula_count(&h).ok());
    }
}
