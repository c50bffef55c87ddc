mod common;

use common::arb_graph;
use factorspec_core::{graph6, Graph, VertexSet};
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(0, 40)) {
        let code = graph6::encode(&g);
        prop_assert!(code.iter().all(|&c| (63..=126).contains(&c)));
        prop_assert_eq!(graph6::parse(&code).unwrap(), g);
    }

    #[test]
    fn handshake(g in arb_graph(0, 20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn join_and_union_counts(g in arb_graph(0, 8), h in arb_graph(0, 8)) {
        let u = g.disjoint_union(&h);
        let j = g.join(&h);
        prop_assert_eq!(u.n(), g.n() + h.n());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
        // G ∇ H is the complement of the union of complements
        prop_assert_eq!(j, g.complement().disjoint_union(&h.complement()).complement());
    }

    #[test]
    fn complement_involution(g in arb_graph(0, 12)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn components_partition(g in arb_graph(1, 14), removed in any::<u16>()) {
        let n = g.n();
        let x = VertexSet::from_vertices(n, (0..n).filter(|v| removed >> v & 1 == 1)).unwrap();
        let comps = g.components_excluding(&x).unwrap();
        let mut seen = x.clone();
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(c.is_disjoint(&seen));
            seen = seen.union(c);
            // no edge leaves a component inside G - X
            let outside = VertexSet::full(n).difference(c).difference(&x);
            prop_assert_eq!(g.edges_between(c, &outside).unwrap(), 0);
            prop_assert!(g.induced(c).unwrap().is_connected().unwrap());
        }
        prop_assert_eq!(seen, VertexSet::full(n));
    }

    #[test]
    fn edges_between_symmetry(g in arb_graph(1, 14), split in any::<u16>()) {
        let n = g.n();
        let a = VertexSet::from_vertices(n, (0..n).filter(|v| split >> v & 1 == 1)).unwrap();
        let b = a.complement();
        let ab = g.edges_between(&a, &b).unwrap();
        prop_assert_eq!(ab, g.edges_between(&b, &a).unwrap());
        let brute = g.edges().filter(|&(u, v)| a.contains(u) != a.contains(v)).count();
        prop_assert_eq!(ab, brute);
    }

    #[test]
    fn degrees_excluding_matches_induced(g in arb_graph(1, 12), removed in any::<u16>()) {
        let n = g.n();
        let s = VertexSet::from_vertices(n, (0..n).filter(|v| removed >> v & 1 == 1)).unwrap();
        let rest = s.complement();
        let sub = g.induced(&rest).unwrap();
        let d = g.degrees_excluding(&s).unwrap();
        for (i, v) in rest.iter().enumerate() {
            prop_assert_eq!(d[v], Some(sub.degree(i)));
        }
        for v in s.iter() {
            prop_assert_eq!(d[v], None);
        }
    }
}

#[test]
fn named_families() {
    assert_eq!(graph6::encode_string(&Graph::complete(3)), "Bw");
    assert_eq!(Graph::cycle(7).degrees(), vec![2; 7]);
    assert_eq!(Graph::star(5).edge_count(), 5);
    assert!(Graph::path(9).is_connected().unwrap());
    assert!(!Graph::empty(2).is_connected().unwrap());
}
