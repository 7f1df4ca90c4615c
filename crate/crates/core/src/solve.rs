//! Picks a solver for an instance and collects its counters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::brute_force_minimum;
use crate::recognition::{find_induced, least_free_s, require_free, PatternGraph};
use crate::sfvs::sfvs_sp1p3free;
use crate::soct::{soct_p4free, soct_sp1p3free};
use crate::svc::{svc_p4free, svc_sp1p4free};
use crate::validity::{Instance, Problem, Solution};

/// Largest order for which automatic routing falls back to the oracle
/// when the graph is in no supported class.
pub const AUTO_ORACLE_LIMIT: usize = 20;

pub const DEFAULT_S_MAX: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Smallest supported class with `s ≤ s_max`, else the oracle on small
    /// graphs.
    Auto {
        s_max: usize,
    },
    P4Free,
    Sp1p3Free(usize),
    Sp1p4Free(usize),
    Brute,
}

/// The class (and so the algorithm) that produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassUsed {
    P4Free,
    Sp1p3Free,
    Sp1p4Free,
    Brute,
}

impl ClassUsed {
    pub fn name(self) -> &'static str {
        match self {
            ClassUsed::P4Free => "p4free",
            ClassUsed::Sp1p3Free => "sp1p3free",
            ClassUsed::Sp1p4Free => "sp1p4free",
            ClassUsed::Brute => "brute",
        }
    }
}

impl fmt::Display for ClassUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassUsed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            ClassUsed::P4Free,
            ClassUsed::Sp1p3Free,
            ClassUsed::Sp1p4Free,
            ClassUsed::Brute,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub solution: Solution,
    pub class_used: ClassUsed,
    pub s: Option<usize>,
    pub stats: BTreeMap<String, u64>,
}

fn unsupported(problem: Problem, class: ClassUsed) -> Error {
    Error::PreconditionViolated(format!("no {class} algorithm for {problem}"))
}

/// Solves `inst` along `route`. Fixed routes check class membership and
/// fail with [`Error::NotInClass`] when the graph is outside it.
pub fn solve(inst: &Instance, route: Route) -> Result<SolveReport> {
    let (graph, terminals) = (&inst.graph, &inst.terminals);
    let route = match route {
        Route::Auto { s_max } => auto_route(inst, s_max)?,
        fixed => fixed,
    };
    let mut stats = BTreeMap::new();
    let (solution, class_used, s) = match (inst.problem, route) {
        (_, Route::Auto { .. }) => unreachable!("resolved above"),
        (_, Route::Brute) => (brute_force_minimum(inst)?, ClassUsed::Brute, None),
        (Problem::Svc, Route::P4Free) => (svc_p4free(graph, terminals)?, ClassUsed::P4Free, None),
        // Every (sP1+P3)-free graph is (sP1+P4)-free.
        (Problem::Svc, Route::Sp1p3Free(s)) => {
            require_free(graph, &PatternGraph::sp1_p3(s))?;
            (
                svc_sp1p4free(graph, terminals, s)?,
                ClassUsed::Sp1p4Free,
                Some(s),
            )
        }
        (Problem::Svc, Route::Sp1p4Free(s)) => (
            svc_sp1p4free(graph, terminals, s)?,
            ClassUsed::Sp1p4Free,
            Some(s),
        ),
        (Problem::Sfvs, Route::Sp1p3Free(s)) => {
            let report = sfvs_sp1p3free(graph, terminals, s)?;
            if let Some(w) = report.stats.winner {
                stats.insert(format!("winner_{}", w.to_string().replace('-', "_")), 1);
            }
            for (i, name) in ["many_components", "few_small_components", "large_component"]
                .iter()
                .enumerate()
            {
                stats.insert(format!("guesses_{name}"), report.stats.guesses[i]);
                stats.insert(format!("rejected_{name}"), report.stats.rejected[i]);
            }
            (report.solution, ClassUsed::Sp1p3Free, Some(s))
        }
        (Problem::Soct, Route::P4Free) => {
            let report = soct_p4free(graph, terminals)?;
            for (i, wins) in report.join_stats.wins.iter().enumerate() {
                stats.insert(format!("join_candidate_{i}"), *wins);
            }
            (report.solution, ClassUsed::P4Free, None)
        }
        (Problem::Soct, Route::Sp1p3Free(s)) => {
            let report = soct_sp1p3free(graph, terminals, s)?;
            if let Some(w) = report.stats.winner {
                stats.insert(format!("winner_{}", w.to_string().replace('-', "_")), 1);
            }
            for (i, name) in ["small_terminal_part", "few_neighbours", "many_neighbours"]
                .iter()
                .enumerate()
            {
                stats.insert(format!("guesses_{name}"), report.stats.guesses[i]);
                stats.insert(format!("rejected_{name}"), report.stats.rejected[i]);
            }
            (report.solution, ClassUsed::Sp1p3Free, Some(s))
        }
        (problem, Route::P4Free) => return Err(unsupported(problem, ClassUsed::P4Free)),
        (problem, Route::Sp1p4Free(_)) => return Err(unsupported(problem, ClassUsed::Sp1p4Free)),
    };
    Ok(SolveReport {
        solution,
        class_used,
        s,
        stats,
    })
}

fn auto_route(inst: &Instance, s_max: usize) -> Result<Route> {
    let graph = &inst.graph;
    let found = match inst.problem {
        Problem::Svc => least_free_s(graph, s_max, PatternGraph::sp1_p4).map(|s| {
            if s == 0 {
                Route::P4Free
            } else {
                Route::Sp1p4Free(s)
            }
        }),
        Problem::Soct if find_induced(graph, &PatternGraph::path(4)).is_none() => {
            Some(Route::P4Free)
        }
        Problem::Sfvs | Problem::Soct => {
            least_free_s(graph, s_max, PatternGraph::sp1_p3).map(Route::Sp1p3Free)
        }
    };
    if let Some(route) = found {
        return Ok(route);
    }
    if graph.order() <= AUTO_ORACLE_LIMIT {
        return Ok(Route::Brute);
    }
    let pattern = match inst.problem {
        Problem::Svc => PatternGraph::sp1_p4(s_max),
        Problem::Sfvs | Problem::Soct => PatternGraph::sp1_p3(s_max),
    };
    require_free(graph, &pattern)?;
    unreachable!("no s up to s_max worked, so the last pattern is present")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Graph;

    #[test]
    fn house_auto() {
        let r = solve(&fixtures::house(), Route::Auto { s_max: 3 }).unwrap();
        assert_eq!(r.solution.size(), 1);
        assert!(r.solution.validated);
    }

    #[test]
    fn sfvs_has_no_cograph_route() {
        let inst = fixtures::house().with_problem(Problem::Sfvs);
        assert!(matches!(
            solve(&inst, Route::P4Free),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn auto_picks_cograph_for_soct() {
        let g = Graph::cycle(4);
        let inst = Instance::new(g.clone(), g.all_vertices(), Problem::Soct).unwrap();
        let r = solve(&inst, Route::Auto { s_max: 3 }).unwrap();
        assert_eq!(r.class_used, ClassUsed::P4Free);
        assert!(r.stats.contains_key("join_candidate_0"));
    }

    #[test]
    fn auto_falls_back_then_refuses() {
        let small = Graph::path(12);
        let inst = Instance::new(small.clone(), small.all_vertices(), Problem::Sfvs).unwrap();
        assert_eq!(
            solve(&inst, Route::Auto { s_max: 1 }).unwrap().class_used,
            ClassUsed::Brute
        );
        let big = Graph::path(24);
        let inst = Instance::new(big.clone(), big.all_vertices(), Problem::Sfvs).unwrap();
        assert!(matches!(
            solve(&inst, Route::Auto { s_max: 1 }),
            Err(Error::NotInClass(_))
        ));
    }

    #[test]
    fn fixed_route_checks_class() {
        let g = Graph::path(4);
        let inst = Instance::new(g.clone(), g.all_vertices(), Problem::Soct).unwrap();
        assert!(matches!(
            solve(&inst, Route::P4Free),
            Err(Error::NotInClass(_))
        ));
    }
}
