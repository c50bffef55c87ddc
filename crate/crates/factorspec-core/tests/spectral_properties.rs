mod common;

use common::{arb_connected, arb_graph};
use factorspec_core::{
    build_hnb, charpoly_eval_3x3, hong_bound, leading_eigenvalue, quotient_matrix, rho_hnb,
    spectral_radius, Graph, SplitJoin, VertexSet, DEFAULT_TOL,
};
use proptest::prelude::*;

fn rho(g: &Graph) -> f64 {
    spectral_radius(g, DEFAULT_TOL).unwrap().rho
}

proptest! {
    #[test]
    fn between_average_and_max_degree(g in arb_graph(1, 16)) {
        let r = rho(&g);
        let avg = 2.0 * g.edge_count() as f64 / g.n() as f64;
        prop_assert!(avg <= r + 1e-9);
        prop_assert!(r <= g.max_degree() as f64 + 1e-9);
        // sqrt of the max degree bounds it from below too (a star sits inside)
        prop_assert!((g.max_degree() as f64).sqrt() <= r + 1e-9);
    }

    #[test]
    fn hong(g in arb_connected(1, 14)) {
        prop_assert!(rho(&g) <= hong_bound(&g).unwrap() + 1e-9);
    }

    #[test]
    fn adding_an_edge_never_decreases(g in arb_graph(2, 12), pick in any::<u64>()) {
        let missing: Vec<_> = g.complement().edges().collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[(pick % missing.len() as u64) as usize];
        prop_assert!(rho(&g) <= rho(&g.with_edge(u, v).unwrap()) + 1e-9);
    }

    #[test]
    fn residual_is_small(g in arb_graph(1, 16)) {
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        prop_assert!(r.residual <= 1e-8);
    }

    #[test]
    fn split_join_quotient(left in 1usize..6, center in 1usize..6, right in 1usize..6) {
        let s = SplitJoin::new(left, center, right).unwrap();
        let q = s.quotient();
        let lead = leading_eigenvalue(&q).unwrap();
        prop_assert!((lead - rho(&s.graph())).abs() <= 1e-8);
        prop_assert!(charpoly_eval_3x3(&q, lead).unwrap().abs() <= 1e-6 * lead.powi(3).max(1.0));
        // the generic quotient of the layout agrees with the closed form
        let q2 = quotient_matrix(&s.graph(), &s.parts()).unwrap();
        prop_assert!(q2.is_equitable());
        prop_assert!((leading_eigenvalue(&q2).unwrap() - lead).abs() <= 1e-10);
    }
}

#[test]
fn closed_forms() {
    for n in 2..20 {
        assert!((rho(&Graph::complete(n)) - (n - 1) as f64).abs() < 1e-9);
        assert!((rho(&Graph::star(n)) - (n as f64).sqrt()).abs() < 1e-9);
    }
    for n in 3..20 {
        assert!((rho(&Graph::cycle(n)) - 2.0).abs() < 1e-9);
    }
    // disconnected: the larger component wins
    let g = Graph::complete(4).disjoint_union(&Graph::cycle(5));
    assert!((rho(&g) - 3.0).abs() < 1e-9);
}

#[test]
fn hnb_spectral_radius_grows_with_order() {
    for b in [2, 3, 5] {
        let mut last = 0.0;
        for n in (b + 1)..=500 {
            let r = rho_hnb(n, b).unwrap();
            assert!(r > last, "n={n} b={b}");
            assert!((n as f64 - 2.0) < r && r < (n as f64 - 1.0), "n={n} b={b}");
            last = r;
        }
    }
}

#[test]
fn hnb_quotient_matches_dense() {
    for n in 4..30 {
        for b in 2..n {
            let h = build_hnb(n, b).unwrap();
            let q = quotient_matrix(&h.graph, &h.parts).unwrap();
            assert!((leading_eigenvalue(&q).unwrap() - rho(&h.graph)).abs() < 1e-8);
        }
    }
    let h = build_hnb(10, 3).unwrap();
    let bad = [
        VertexSet::from_vertices(10, [0, 1]).unwrap(),
        VertexSet::from_vertices(10, 2..10).unwrap(),
    ];
    assert!(!quotient_matrix(&h.graph, &bad).unwrap().is_equitable());
}
