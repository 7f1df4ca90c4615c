//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use subtrans::fixtures::{self, petersen_black_set, PetersenVariant};
use subtrans::generators::{gnp, random_subset, reduce_vc_to_soct_split, rng_from_seed};
use subtrans::oracle::{
    brute_force_minimum, minimum_vertex_cover, naive_is_t_bipartite, naive_is_t_forest,
    ORACLE_MAX_ORDER,
};
use subtrans::recognition::{build_modified_cotree, find_induced, PatternGraph};
use subtrans::sfvs::sfvs_sp1p3free;
use subtrans::soct::{soct_p4free, soct_sp1p3free};
use subtrans::solve::{solve, Route};
use subtrans::suites::{cograph_instance, gnp_instance, sp1p3_instance, sp1p4_instance};
use subtrans::svc::{svc_p4free, svc_sp1p4free};
use subtrans::validity::{
    is_t_bipartite, is_t_forest, minimum_solution_bound_holds, verify_solution,
};
use subtrans::{Error, Graph, Instance, Problem, Result, Solution, VertexSet};

const SEED: u64 = 2024;
const COGRAPHS: usize = 500;
const COGRAPH_MAX_N: usize = 14;
const SP1P4_PER_S: usize = 300;
const SP1P4_MAX_N: usize = 12;
const SP1P3_PER_S: usize = 500;
const SP1P3_MAX_N: usize = 13;

/// Checks shared by several criteria, gathered while the suites run.
#[derive(Default)]
struct Ledger {
    solver_outputs: usize,
    unverified: Vec<String>,
    emitted_minimums: usize,
    bound_violations: Vec<String>,
    cotrees: usize,
    cotree_failures: Vec<String>,
    shared_instances: usize,
    dominance_failures: Vec<String>,
}

impl Ledger {
    fn solver_output(&mut self, what: &str, inst: &Instance, sol: &Solution) {
        self.solver_outputs += 1;
        if !sol.validated || !verify_solution(inst, &sol.set) {
            self.unverified.push(what.to_string());
        }
        self.minimum(what, inst, &sol.set);
    }

    fn minimum(&mut self, what: &str, inst: &Instance, set: &VertexSet) {
        self.emitted_minimums += 1;
        if !minimum_solution_bound_holds(&inst.terminals, set) {
            self.bound_violations.push(what.to_string());
        }
    }

    fn cotree(&mut self, what: &str, graph: &Graph) {
        self.cotrees += 1;
        match build_modified_cotree(graph) {
            Ok(tree) if tree.reconstruct() == *graph => {}
            _ => self.cotree_failures.push(what.to_string()),
        }
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], checked: usize, noun: &str) -> Outcome {
    Outcome {
        pass: failures.is_empty() && checked > 0,
        detail: match failures.first() {
            None => format!("{checked} {noun}"),
            Some(first) => format!(
                "{} of {checked} {noun} failed, first: {first}",
                failures.len()
            ),
        },
    }
}

fn oracle_size(inst: &Instance, ledger: &mut Ledger, what: &str) -> usize {
    let sol = brute_force_minimum(inst).expect("suite instances fit the oracle");
    ledger.minimum(&format!("{what} oracle"), inst, &sol.set);
    sol.size()
}

fn compare(
    ledger: &mut Ledger,
    failures: &mut Vec<String>,
    what: String,
    inst: &Instance,
    result: Result<Solution>,
) -> Option<usize> {
    let sol = match result {
        Ok(sol) => sol,
        Err(e) => {
            failures.push(format!("{what}: {e}"));
            return None;
        }
    };
    ledger.solver_output(&what, inst, &sol);
    let want = oracle_size(inst, ledger, &what);
    if sol.size() != want {
        failures.push(format!("{what}: solver {} oracle {want}", sol.size()));
    }
    Some(sol.size())
}

fn house_exact(ledger: &mut Ledger) -> Outcome {
    let house = fixtures::house();
    let mut failures = Vec::new();
    let routes = [Route::Auto { s_max: 3 }, Route::Sp1p3Free(1), Route::Brute];
    for route in routes {
        match solve(&house, route) {
            Ok(r) => {
                ledger.solver_output("house", &house, &r.solution);
                if r.solution.size() != 1 {
                    failures.push(format!("{route:?} gave {}", r.solution.size()));
                }
            }
            Err(e) => failures.push(format!("{route:?}: {e}")),
        }
    }
    outcome(&failures, routes.len(), "routes give size 1")
}

fn petersen_black_sets() -> Outcome {
    let petersen = fixtures::petersen();
    let mut failures = Vec::new();
    for variant in [PetersenVariant::Left, PetersenVariant::Right] {
        for problem in [Problem::Soct, Problem::Sfvs] {
            let inst = petersen.clone().with_problem(problem);
            if !verify_solution(&inst, &petersen_black_set(variant)) {
                failures.push(format!("{variant:?} {problem}"));
            }
        }
    }
    outcome(&failures, 4, "black-set checks")
}

fn svc_suite(ledger: &mut Ledger) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 0..COGRAPHS {
        let inst = cograph_instance(i, COGRAPH_MAX_N, Problem::Svc, SEED);
        ledger.cotree(&format!("svc cograph {i}"), &inst.graph);
        let result = svc_p4free(&inst.graph, &inst.terminals);
        compare(ledger, &mut failures, format!("cograph {i}"), &inst, result);
        checked += 1;
    }
    for s in 1..=2 {
        for i in 0..SP1P4_PER_S {
            let inst = sp1p4_instance(i, s, SP1P4_MAX_N, Problem::Svc, SEED);
            let result = svc_sp1p4free(&inst.graph, &inst.terminals, s);
            compare(ledger, &mut failures, format!("s={s} {i}"), &inst, result);
            checked += 1;
        }
    }
    outcome(&failures, checked, "instances match the oracle")
}

fn sp1p3_suites(ledger: &mut Ledger) -> (Outcome, Outcome) {
    let mut sfvs_failures = Vec::new();
    let mut soct_failures = Vec::new();
    let mut checked = 0;
    for s in 0..=2 {
        for i in 0..SP1P3_PER_S {
            let base = sp1p3_instance(i, s, SP1P3_MAX_N, Problem::Sfvs, SEED);
            let what = format!("s={s} {i}");
            let inst = base.clone();
            let result = sfvs_sp1p3free(&inst.graph, &inst.terminals, s).map(|r| r.solution);
            let sfvs = compare(ledger, &mut sfvs_failures, what.clone(), &inst, result);
            let inst = base.with_problem(Problem::Soct);
            let result = soct_sp1p3free(&inst.graph, &inst.terminals, s).map(|r| r.solution);
            let soct = compare(ledger, &mut soct_failures, what.clone(), &inst, result);
            if let (Some(f), Some(o)) = (sfvs, soct) {
                ledger.shared_instances += 1;
                if o > f {
                    ledger
                        .dominance_failures
                        .push(format!("{what}: soct {o} > sfvs {f}"));
                }
            }
            checked += 1;
        }
    }
    let sfvs = outcome(&sfvs_failures, checked, "instances match the oracle");
    for i in 0..COGRAPHS {
        let inst = cograph_instance(i, COGRAPH_MAX_N, Problem::Soct, SEED ^ 1);
        ledger.cotree(&format!("soct cograph {i}"), &inst.graph);
        let result = soct_p4free(&inst.graph, &inst.terminals).map(|r| r.solution);
        compare(
            ledger,
            &mut soct_failures,
            format!("cograph {i}"),
            &inst,
            result,
        );
        checked += 1;
    }
    (
        sfvs,
        outcome(&soct_failures, checked, "instances match the oracle"),
    )
}

fn reduction(ledger: &mut Ledger) -> Outcome {
    let mut failures = Vec::new();
    let mut rng = rng_from_seed(SEED ^ 6);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..=0.6);
        let g = gnp(n, p, &mut rng);
        // The reduced graph has one vertex per vertex and edge of `g`.
        if n + g.size() > ORACLE_MAX_ORDER {
            continue;
        }
        let reduced = reduce_vc_to_soct_split(&g);
        let cover = minimum_vertex_cover(&g).expect("small graph").len();
        let transversal = oracle_size(&reduced, ledger, "reduction");
        if cover != transversal {
            failures.push(format!(
                "graph {g:?}: cover {cover} transversal {transversal}"
            ));
        }
        checked += 1;
    }
    outcome(&failures, checked, "reductions preserve the optimum")
}

fn validity_tests() -> Outcome {
    let mut failures = Vec::new();
    for i in 0..500 {
        let inst = gnp_instance(i, 9, Problem::Soct, SEED ^ 7);
        let (g, t) = (&inst.graph, &inst.terminals);
        let forest = naive_is_t_forest(g, t).expect("small graph");
        let bipartite = naive_is_t_bipartite(g, t).expect("small graph");
        if is_t_forest(g, t) != forest || is_t_bipartite(g, t) != bipartite {
            failures.push(format!("instance {i}"));
        }
    }
    outcome(&failures, 500, "graphs agree with cycle enumeration")
}

/// Runs a solver on a graph known to contain `pattern` and checks that it
/// refuses with an induced copy of `pattern`.
fn refuses_with_witness(
    graph: &Graph,
    pattern: &PatternGraph,
    result: Result<Solution>,
) -> std::result::Result<(), String> {
    let witness = match result {
        Err(Error::NotInClass(v)) => v.witness,
        Err(e) => return Err(format!("unexpected error {e}")),
        Ok(_) => return Err("accepted an out-of-class graph".into()),
    };
    let h = pattern.graph();
    let set = VertexSet::from_vertices(graph.order(), witness.iter().copied());
    let exact = witness.len() == h.order()
        && set.len() == witness.len()
        && h.vertices().all(|i| {
            h.vertices()
                .all(|j| i == j || h.has_edge(i, j) == graph.has_edge(witness[i], witness[j]))
        });
    let (sub, _) = graph.induced_subgraph(&set);
    if exact && find_induced(&sub, pattern).is_some() {
        Ok(())
    } else {
        Err(format!("bad witness {witness:?} for {}", pattern.name()))
    }
}

fn structural(ledger: &Ledger) -> Outcome {
    let mut failures = ledger.cotree_failures.clone();
    failures.extend(ledger.unverified.iter().cloned());
    let mut rng = rng_from_seed(SEED ^ 9);
    let mut refused = 0;
    while refused < 100 {
        let n = rng.gen_range(6..=12);
        let g = gnp(n, rng.gen_range(0.2..=0.6), &mut rng);
        let t = random_subset(n, 0.5, rng.gen());
        let s = rng.gen_range(0..=2);
        let (pattern, result) = match refused % 5 {
            0 => (PatternGraph::path(4), svc_p4free(&g, &t)),
            1 => (
                PatternGraph::path(4),
                soct_p4free(&g, &t).map(|r| r.solution),
            ),
            2 => (PatternGraph::sp1_p4(s), svc_sp1p4free(&g, &t, s)),
            3 => (
                PatternGraph::sp1_p3(s),
                sfvs_sp1p3free(&g, &t, s).map(|r| r.solution),
            ),
            _ => (
                PatternGraph::sp1_p3(s),
                soct_sp1p3free(&g, &t, s).map(|r| r.solution),
            ),
        };
        if find_induced(&g, &pattern).is_none() {
            continue;
        }
        if let Err(e) = refuses_with_witness(&g, &pattern, result) {
            failures.push(format!("refusal {refused}: {e}"));
        }
        refused += 1;
    }
    let noun = format!(
        "checks ({} cotree round trips, {} verified outputs, {refused} refusals)",
        ledger.cotrees, ledger.solver_outputs
    );
    outcome(
        &failures,
        ledger.cotrees + ledger.solver_outputs + refused,
        &noun,
    )
}

fn run<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn report(number: usize, name: &str, limit: Option<Duration>, result: (Outcome, Duration)) -> bool {
    let (o, elapsed) = result;
    let pass = o.pass && limit.is_none_or(|l| elapsed <= l);
    let timing = match limit {
        Some(l) => format!(" [{elapsed:.2?}, limit {l:?}]"),
        None => String::new(),
    };
    println!(
        "criterion {number:>2} {} {name}: {}{timing}",
        if pass { "PASS" } else { "FAIL" },
        o.detail,
    );
    pass
}

fn main() -> ExitCode {
    let minutes = |m: u64| Duration::from_secs(60 * m);
    let mut ledger = Ledger::default();
    let mut all = true;

    all &= report(
        1,
        "house fixture",
        Some(Duration::from_secs(1)),
        run(|| house_exact(&mut ledger)),
    );
    all &= report(
        2,
        "petersen black sets",
        Some(Duration::from_secs(1)),
        run(petersen_black_sets),
    );
    all &= report(
        3,
        "svc oracle equivalence",
        Some(minutes(10)),
        run(|| svc_suite(&mut ledger)),
    );
    // Both suites run over the same instances, so they share one timing.
    let ((sfvs, soct), elapsed) = run(|| sp1p3_suites(&mut ledger));
    all &= report(
        4,
        "sfvs oracle equivalence",
        Some(minutes(30)),
        (sfvs, elapsed),
    );
    all &= report(
        5,
        "soct oracle equivalence",
        Some(minutes(30)),
        (soct, elapsed),
    );
    all &= report(
        6,
        "vertex cover reduction",
        Some(minutes(5)),
        run(|| reduction(&mut ledger)),
    );
    all &= report(7, "validity tests", Some(minutes(5)), run(validity_tests));
    let bound = outcome(
        &ledger.bound_violations,
        ledger.emitted_minimums,
        "minimum solutions",
    );
    all &= report(8, "non-terminal bound", None, (bound, Duration::ZERO));
    all &= report(
        9,
        "structural invariants",
        None,
        run(|| structural(&ledger)),
    );
    let dominance = outcome(
        &ledger.dominance_failures,
        ledger.shared_instances,
        "shared instances with soct <= sfvs",
    );
    all &= report(10, "dominance", None, (dominance, Duration::ZERO));

    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: some criteria failed");
        ExitCode::FAILURE
    }
}
