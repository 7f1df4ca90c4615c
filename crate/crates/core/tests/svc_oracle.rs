use subtrans::oracle::brute_force_minimum;
use subtrans::suites::{cograph_instance, sp1p4_instance};
use subtrans::svc::{svc_p4free, svc_sp1p4free};
use subtrans::validity::minimum_solution_bound_holds;
use subtrans::Problem;

#[test]
fn cographs_match_oracle() {
    for i in 0..300 {
        let inst = cograph_instance(i, 12, Problem::Svc, 31);
        let sol = svc_p4free(&inst.graph, &inst.terminals).unwrap();
        let expected = brute_force_minimum(&inst).unwrap();
        assert!(sol.validated, "i={i}");
        assert!(minimum_solution_bound_holds(&inst.terminals, &sol.set));
        assert_eq!(sol.size(), expected.size(), "i={i} graph={:?}", inst.graph);
    }
}

#[test]
fn sp1p4_free_matches_oracle() {
    for s in 1..=2 {
        for i in 0..150 {
            let inst = sp1p4_instance(i, s, 11, Problem::Svc, 37);
            let sol = svc_sp1p4free(&inst.graph, &inst.terminals, s).unwrap();
            let expected = brute_force_minimum(&inst).unwrap();
            assert!(sol.validated, "s={s} i={i}");
            assert!(minimum_solution_bound_holds(&inst.terminals, &sol.set));
            assert_eq!(
                sol.size(),
                expected.size(),
                "s={s} i={i} graph={:?}",
                inst.graph
            );
        }
    }
}
