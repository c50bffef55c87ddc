#![allow(dead_code)]

use factorspec_core::Graph;
use proptest::prelude::*;

/// Labeled graph on `lo..=hi` vertices, each edge present independently.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

/// Denser variant: each edge present with probability 3/4.
pub fn arb_dense_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(0u8..4, pairs)
            .prop_map(move |v| from_bits(n, &v.iter().map(|&x| x > 0).collect::<Vec<_>>()))
    })
}

pub fn arb_connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    arb_dense_graph(lo, hi).prop_filter("connected", |g| g.is_connected().unwrap())
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Brute-force check for a spanning subgraph with degree exactly `h(v)` at each vertex.
pub fn brute_h_factor(g: &Graph, h: &[usize]) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 20, "brute force limited to 20 edges");
    (0u32..1 << m).any(|mask| {
        let mut deg = vec![0usize; g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg == h
    })
}
