//! T-forest and T-bipartite tests via blocks, plus solution checking.

use std::fmt;
use std::str::FromStr;

use crate::blocks::for_each_block;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Subset vertex cover: hit every edge incident to a terminal.
    Svc,
    /// Subset feedback vertex set: hit every cycle through a terminal.
    Sfvs,
    /// Subset odd cycle transversal: hit every odd cycle through a terminal.
    Soct,
}

impl Problem {
    pub const ALL: [Problem; 3] = [Problem::Svc, Problem::Sfvs, Problem::Soct];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Svc => "svc",
            Problem::Sfvs => "sfvs",
            Problem::Soct => "soct",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "svc" => Ok(Problem::Svc),
            "sfvs" => Ok(Problem::Sfvs),
            "soct" => Ok(Problem::Soct),
            other => Err(format!(
                "unknown problem {other:?} (expected svc, sfvs or soct)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub terminals: VertexSet,
    pub problem: Problem,
    /// Class parameter for the `(sP1+P3)`- and `(sP1+P4)`-free solvers.
    pub s: Option<usize>,
}

impl Instance {
    pub fn new(graph: Graph, terminals: VertexSet, problem: Problem) -> Result<Instance> {
        if terminals.capacity() != graph.order() {
            if let Some(v) = terminals.iter().find(|&v| v >= graph.order()) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: graph.order(),
                });
            }
        }
        let terminals = VertexSet::from_vertices(graph.order(), terminals.iter());
        Ok(Instance {
            graph,
            terminals,
            problem,
            s: None,
        })
    }

    pub fn with_problem(mut self, problem: Problem) -> Instance {
        self.problem = problem;
        self
    }

    pub fn with_s(mut self, s: usize) -> Instance {
        self.s = Some(s);
        self
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub problem: Problem,
    pub set: VertexSet,
    pub validated: bool,
}

impl Solution {
    /// Wraps `set` after checking it against `inst`.
    pub fn checked(inst: &Instance, set: VertexSet) -> Solution {
        let validated = verify_solution(inst, &set);
        Solution {
            problem: inst.problem,
            set,
            validated,
        }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }
}

/// True iff no cycle of `graph` passes through a vertex of `terminals`.
pub fn is_t_forest(graph: &Graph, terminals: &VertexSet) -> bool {
    is_t_forest_within(graph, &graph.all_vertices(), terminals)
}

/// [`is_t_forest`] for `G[alive]` with terminals `terminals ∩ alive`.
pub fn is_t_forest_within(graph: &Graph, alive: &VertexSet, terminals: &VertexSet) -> bool {
    if alive.is_disjoint(terminals) {
        return true;
    }
    let mut ok = true;
    for_each_block(graph, alive, |block| {
        if block.len() >= 3 && !block.is_disjoint(terminals) {
            ok = false;
        }
        ok
    });
    ok
}

/// True iff no odd cycle of `graph` passes through a vertex of `terminals`.
pub fn is_t_bipartite(graph: &Graph, terminals: &VertexSet) -> bool {
    is_t_bipartite_within(graph, &graph.all_vertices(), terminals)
}

/// [`is_t_bipartite`] for `G[alive]` with terminals `terminals ∩ alive`.
pub fn is_t_bipartite_within(graph: &Graph, alive: &VertexSet, terminals: &VertexSet) -> bool {
    if alive.is_disjoint(terminals) {
        return true;
    }
    let mut ok = true;
    for_each_block(graph, alive, |block| {
        if block.len() >= 3 && !block.is_disjoint(terminals) && !graph.is_bipartite_within(&block) {
            ok = false;
        }
        ok
    });
    ok
}

/// True iff every edge with an endpoint in `terminals` has an endpoint in `cover`.
pub fn is_t_vertex_cover(graph: &Graph, terminals: &VertexSet, cover: &VertexSet) -> bool {
    terminals
        .iter()
        .filter(|&t| !cover.contains(t))
        .all(|t| graph.neighbors(t).iter().all(|&w| cover.contains(w)))
}

/// Checks the covering condition of `inst.problem` for `set`.
pub fn verify_solution(inst: &Instance, set: &VertexSet) -> bool {
    let g = &inst.graph;
    if set.iter().any(|v| v >= g.order()) {
        return false;
    }
    let set = VertexSet::from_vertices(g.order(), set.iter());
    match inst.problem {
        Problem::Svc => is_t_vertex_cover(g, &inst.terminals, &set),
        Problem::Sfvs => is_t_forest_within(g, &set.complement(), &inst.terminals),
        Problem::Soct => is_t_bipartite_within(g, &set.complement(), &inst.terminals),
    }
}

/// `|S \ T| <= |T \ S|`, which every minimum solution satisfies.
pub fn minimum_solution_bound_holds(terminals: &VertexSet, set: &VertexSet) -> bool {
    set.difference(terminals).len() <= terminals.difference(set).len()
}
