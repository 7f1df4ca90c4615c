use proptest::prelude::*;

use subtrans::generators::{
    project_soct_to_vc, random_cograph, random_graph, random_in_class, random_subset,
    reduce_vc_to_soct_split,
};
use subtrans::oracle::{
    brute_force_minimum, minimum_vertex_cover, naive_is_t_bipartite, naive_is_t_forest,
    ORACLE_MAX_ORDER,
};
use subtrans::recognition::{build_modified_cotree, classify, find_induced, PatternGraph};
use subtrans::sfvs::sfvs_sp1p3free;
use subtrans::soct::{soct_p4free, soct_sp1p3free};
use subtrans::solve::{solve, Route};
use subtrans::suites::sp1p3_instance;
use subtrans::svc::svc_p4free;
use subtrans::validity::{
    is_t_bipartite, is_t_forest, is_t_vertex_cover, minimum_solution_bound_holds, verify_solution,
};
use subtrans::{Instance, Problem};

fn small_graph() -> impl Strategy<Value = (usize, f64, u64, f64)> {
    (1usize..=9, 0.1f64..0.9, any::<u64>(), 0.1f64..0.9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn validity_tests_match_cycle_enumeration((n, p, seed, q) in small_graph()) {
        let g = random_graph(n, p, seed);
        let t = random_subset(n, q, seed ^ 1);
        prop_assert_eq!(is_t_forest(&g, &t), naive_is_t_forest(&g, &t).unwrap());
        prop_assert_eq!(is_t_bipartite(&g, &t), naive_is_t_bipartite(&g, &t).unwrap());
    }

    #[test]
    fn complement_is_an_involution((n, p, seed, _q) in small_graph()) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn cotree_round_trip(n in 1usize..=14, seed in any::<u64>()) {
        let g = random_cograph(n, seed);
        let tree = build_modified_cotree(&g).expect("generated cographs are cographs");
        prop_assert_eq!(tree.reconstruct(), g);
    }

    #[test]
    fn non_cographs_give_p4_witness((n, p, seed, _q) in small_graph()) {
        let g = random_graph(n, p, seed);
        if let Err(witness) = build_modified_cotree(&g) {
            let (sub, _) = g.induced_subgraph(
                &subtrans::VertexSet::from_vertices(n, witness.iter().copied()),
            );
            prop_assert!(find_induced(&sub, &PatternGraph::path(4)).is_some());
        }
    }

    #[test]
    fn in_class_generator_output_is_free(n in 4usize..=12, s in 0usize..=2, seed in any::<u64>()) {
        match random_in_class(n, s, 0.8, seed) {
            Ok(g) => prop_assert!(find_induced(&g, &PatternGraph::sp1_p3(s)).is_none()),
            Err(e) => prop_assert!(matches!(e, subtrans::Error::GiveUp { .. }), "{e}"),
        }
    }

    #[test]
    fn reduction_preserves_optimum((n, p, seed, _q) in (1usize..=9, 0.1f64..0.6, any::<u64>(), 0.0f64..1.0)) {
        let g = random_graph(n, p, seed);
        prop_assume!(n + g.size() <= ORACLE_MAX_ORDER);
        let reduced = reduce_vc_to_soct_split(&g);
        prop_assert!(classify(&reduced.graph, 0).unwrap().is_split);
        let cover = minimum_vertex_cover(&g).unwrap();
        let transversal = brute_force_minimum(&reduced).unwrap();
        prop_assert_eq!(cover.len(), transversal.size());
        let projected = project_soct_to_vc(&g, &transversal.set);
        prop_assert_eq!(projected.len(), cover.len());
        prop_assert!(is_t_vertex_cover(&g, &g.all_vertices(), &projected));
    }

    #[test]
    fn oracle_minimum_respects_bound((n, p, seed, q) in small_graph(), k in 0usize..3) {
        let g = random_graph(n, p, seed);
        let t = random_subset(n, q, seed ^ 3);
        let inst = Instance::new(g, t, Problem::ALL[k]).unwrap();
        let sol = brute_force_minimum(&inst).unwrap();
        prop_assert!(minimum_solution_bound_holds(&inst.terminals, &sol.set));
        prop_assert!(verify_solution(&inst, &sol.set));
    }

    #[test]
    fn problems_nest_on_cographs(n in 1usize..=12, seed in any::<u64>(), q in 0.0f64..1.0) {
        // A T-vertex cover leaves no T-cycle, and no T-cycle means no odd one.
        let g = random_cograph(n, seed);
        let t = random_subset(n, q, seed ^ 5);
        let svc = svc_p4free(&g, &t).unwrap();
        let soct = soct_p4free(&g, &t).unwrap().solution;
        let sfvs = sfvs_sp1p3free(&g, &t, 3.min(n)).ok();
        prop_assert!(soct.size() <= svc.size());
        if let Some(f) = sfvs {
            prop_assert!(soct.size() <= f.solution.size());
            prop_assert!(f.solution.size() <= svc.size());
        }
    }

    #[test]
    fn sp1p3_solvers_dominate(index in 0usize..10_000, s in 0usize..=2, seed in any::<u64>()) {
        let inst = sp1p3_instance(index, s, 11, Problem::Sfvs, seed);
        let (g, t) = (&inst.graph, &inst.terminals);
        let sfvs = sfvs_sp1p3free(g, t, s).unwrap().solution;
        let soct = soct_sp1p3free(g, t, s).unwrap().solution;
        prop_assert!(sfvs.validated && soct.validated);
        prop_assert!(soct.size() <= sfvs.size());
    }

    #[test]
    fn routes_agree_with_brute((n, p, seed, q) in small_graph(), k in 0usize..3) {
        let g = random_graph(n, p, seed);
        let t = random_subset(n, q, seed ^ 9);
        let inst = Instance::new(g, t, Problem::ALL[k]).unwrap();
        let brute = solve(&inst, Route::Brute).unwrap();
        for route in [Route::P4Free, Route::Sp1p3Free(1), Route::Sp1p3Free(2), Route::Sp1p4Free(1)] {
            if let Ok(report) = solve(&inst, route) {
                prop_assert!(report.solution.validated);
                prop_assert_eq!(report.solution.size(), brute.solution.size(), "{:?}", route);
            }
        }
    }
}
