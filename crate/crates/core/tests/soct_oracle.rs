use subtrans::oracle::brute_force_minimum;
use subtrans::soct::{soct_p4free, soct_sp1p3free};
use subtrans::suites::{cograph_instance, sp1p3_instance};
use subtrans::validity::minimum_solution_bound_holds;
use subtrans::Problem;

#[test]
fn cographs_match_oracle() {
    let mut wins = [0u64; 7];
    for i in 0..300 {
        let inst = cograph_instance(i, 12, Problem::Soct, 23);
        let report = soct_p4free(&inst.graph, &inst.terminals).unwrap();
        let expected = brute_force_minimum(&inst).unwrap();
        assert!(report.solution.validated, "i={i}");
        assert_eq!(
            report.solution.size(),
            expected.size(),
            "i={i} graph={:?} t={:?} got={:?} want={:?}",
            inst.graph,
            inst.terminals,
            report.solution.set,
            expected.set
        );
        for (w, c) in wins.iter_mut().zip(report.join_stats.wins) {
            *w += c;
        }
    }
    println!("join winners {wins:?}");
    assert!(wins[..4].iter().all(|&c| c > 0), "{wins:?}");
}

#[test]
fn sp1p3_free_matches_oracle() {
    for s in 0..=2 {
        let mut wins = [0usize; 3];
        for i in 0..200 {
            let inst = sp1p3_instance(i, s, 11, Problem::Soct, 19);
            let report = soct_sp1p3free(&inst.graph, &inst.terminals, s).unwrap();
            let expected = brute_force_minimum(&inst).unwrap();
            assert!(report.solution.validated, "s={s} i={i}");
            assert!(minimum_solution_bound_holds(
                &inst.terminals,
                &report.solution.set
            ));
            assert_eq!(
                report.solution.size(),
                expected.size(),
                "s={s} i={i} graph={:?} t={:?} got={:?} want={:?} stats={:?}",
                inst.graph,
                inst.terminals,
                report.solution.set,
                expected.set,
                report.stats
            );
            if let Some(w) = report.stats.winner {
                wins[w.index()] += 1;
            }
        }
        println!("s={s} winners {wins:?}");
    }
}
