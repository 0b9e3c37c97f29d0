use proptest::prelude::*;

use tutte_activities::complexes::verify_h_identities;
use tutte_activities::decision::{gm_expansion, SeededChooser};
use tutte_activities::forest::tutte_forest_expansion;
use tutte_activities::orientation::{count_acyclic_orientations, orientation_expansion_4var};
use tutte_activities::poly::integer;
use tutte_activities::structure::convolution_check;
use tutte_activities::subgraph::{crapo_verify, gt_expansion};
use tutte_activities::tutte::{shift_to_four_variables, tutte_delcon, tutte_whitney};
use tutte_activities::{EdgeSubset, Graph, MultiPoly, Var};

/// Multigraphs with loops, not necessarily connected.
fn multigraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges)
            .prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_routes_to_the_polynomial(g in multigraph(5, 7)) {
        let t = tutte_whitney(&g).unwrap();
        prop_assert_eq!(&tutte_delcon(&g), &t);
        prop_assert_eq!(&tutte_forest_expansion(&g).unwrap(), &t);
    }

    #[test]
    fn standard_evaluations(g in multigraph(5, 7)) {
        let t = tutte_whitney(&g).unwrap();
        let at = |x, y| t.evaluate_ints(&[(Var::X, x), (Var::Y, y)]).unwrap();
        prop_assert_eq!(at(1, 1), integer(g.maximal_spanning_forests().len() as i64));
        prop_assert_eq!(at(2, 2), integer(1 << g.edge_count()));
        prop_assert_eq!(at(2, 0), integer(count_acyclic_orientations(&g).unwrap() as i64));
        prop_assert!(t.has_nonnegative_integer_coefficients());
    }

    #[test]
    fn deletion_contraction_step(g in multigraph(4, 6), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let e = pick.index(g.edge_count());
        prop_assume!(!g.is_loop(e) && !g.is_bridge(e));
        let one = EdgeSubset::singleton(e);
        let sum = &tutte_whitney(&g.delete(one)).unwrap() + &tutte_whitney(&g.contract(one)).unwrap();
        prop_assert_eq!(sum, tutte_whitney(&g).unwrap());
    }

    #[test]
    fn four_variable_expansions(g in multigraph(4, 6), seed in any::<u64>()) {
        let t4 = shift_to_four_variables(&tutte_whitney(&g).unwrap());
        prop_assert_eq!(&gt_expansion(&g).unwrap(), &t4);
        prop_assert_eq!(&orientation_expansion_4var(&g).unwrap(), &t4);
        let d = SeededChooser { seed, edge_count: g.edge_count() };
        prop_assert_eq!(&gm_expansion(&g, &d).unwrap(), &t4);
    }

    #[test]
    fn structural_identities(g in multigraph(4, 6)) {
        prop_assert!(crapo_verify(&g).unwrap());
        prop_assert!(convolution_check(&g).unwrap());
        prop_assert!(verify_h_identities(&g).unwrap());
    }

    #[test]
    fn polynomial_json_round_trip(g in multigraph(4, 6)) {
        let t = tutte_whitney(&g).unwrap();
        prop_assert_eq!(&MultiPoly::from_json(&t.to_json()).unwrap(), &t);
        prop_assert_eq!(&t.to_string().parse::<MultiPoly>().unwrap(), &t);
    }

    #[test]
    fn vertex_relabelling_preserves_the_polynomial(g in multigraph(5, 7), shift in 0usize..5) {
        let n = g.vertex_count();
        let map: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
        prop_assert_eq!(
            tutte_whitney(&g.relabel_vertices(&map).unwrap()).unwrap(),
            tutte_whitney(&g).unwrap()
        );
    }
}
