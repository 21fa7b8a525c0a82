#![allow(dead_code)]

use betapath::generators::random_linear;
use betapath::Hypergraph;
use proptest::prelude::*;

/// Hypergraphs on up to `max_vertices` vertices with up to `max_edges`
/// distinct edges of size 1 to 3. Isolated vertices are possible.
pub fn small_hypergraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=3), 1..=max_edges).prop_map(move |edges| {
            let mut distinct: Vec<Vec<usize>> = Vec::new();
            for e in edges {
                let e: Vec<usize> = e.into_iter().collect();
                if !distinct.contains(&e) {
                    distinct.push(e);
                }
            }
            let names = (0..n).map(|i| format!("x{i}")).collect();
            Hypergraph::from_indices(names, distinct, None).unwrap()
        })
    })
}

/// Linear `k`-uniform hypergraphs from the seeded generator.
pub fn linear_hypergraph(k: std::ops::RangeInclusive<usize>, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (k, 1..=max_edges, any::<u64>()).prop_filter_map("infeasible", |(k, m, seed)| {
        let n = (k * m).clamp(k + 1, 12);
        random_linear(k, n, m, seed).ok()
    })
}

/// Linear hypergraphs trimmed to minimum degree 2, which tend to be rich in
/// β-cycles.
pub fn cyclic_linear_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2..=3usize, 4..=9usize, any::<u64>()).prop_filter_map("no core", |(k, m, seed)| {
        let n = (k * m * 2 / 3).max(k + 2);
        let h = random_linear(k, n, m, seed).ok()?.min_degree_core(2);
        (h.edge_count() >= 3).then_some(h)
    })
}
