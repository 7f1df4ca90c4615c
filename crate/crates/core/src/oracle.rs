//! Exponential-time reference answers for testing the polynomial solvers.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::validity::{verify_solution, Instance, Solution};

pub const ORACLE_MAX_ORDER: usize = 24;
pub const NAIVE_CYCLE_MAX_ORDER: usize = 12;

/// A minimum solution found by trying sets in order of size, then
/// lexicographically, skipping sets with `|S \ T| > |T \ S|` (no minimum
/// solution has that shape).
pub fn brute_force_minimum(inst: &Instance) -> Result<Solution> {
    let n = inst.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::InstanceTooLarge {
            n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let t = &inst.terminals;
    // T itself is always a solution, so no minimum is larger.
    for k in 0..=t.len() {
        for combo in (0..n).combinations(k) {
            let outside = combo.iter().filter(|&&v| !t.contains(v)).count();
            if outside > t.len() - (k - outside) {
                continue;
            }
            let set = VertexSet::from_vertices(n, combo);
            if verify_solution(inst, &set) {
                return Ok(Solution {
                    problem: inst.problem,
                    set,
                    validated: true,
                });
            }
        }
    }
    unreachable!("the terminal set is always a solution")
}

pub fn brute_force_minimum_size(inst: &Instance) -> Result<usize> {
    brute_force_minimum(inst).map(|s| s.size())
}

/// Minimum vertex cover of `graph` by the same enumeration.
pub fn minimum_vertex_cover(graph: &Graph) -> Result<VertexSet> {
    let inst = Instance::new(
        graph.clone(),
        graph.all_vertices(),
        crate::validity::Problem::Svc,
    )?;
    brute_force_minimum(&inst).map(|s| s.set)
}

/// Calls `visit(cycle)` for every simple cycle, each listed once per
/// direction, starting at its least vertex. Stops when `visit` returns true
/// and reports whether it did.
fn any_simple_cycle(graph: &Graph, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn walk(
        graph: &Graph,
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut VertexSet,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().expect("non-empty path");
        for &w in graph.neighbors(last) {
            if w == root && path.len() >= 3 {
                if visit(path) {
                    return true;
                }
            } else if w > root && !on_path.contains(w) {
                path.push(w);
                on_path.insert(w);
                if walk(graph, root, path, on_path, visit) {
                    return true;
                }
                on_path.remove(w);
                path.pop();
            }
        }
        false
    }
    for root in graph.vertices() {
        let mut path = vec![root];
        let mut on_path = VertexSet::singleton(graph.order(), root);
        if walk(graph, root, &mut path, &mut on_path, &mut visit) {
            return true;
        }
    }
    false
}

fn naive_guard(graph: &Graph) -> Result<()> {
    if graph.order() > NAIVE_CYCLE_MAX_ORDER {
        return Err(Error::InstanceTooLarge {
            n: graph.order(),
            limit: NAIVE_CYCLE_MAX_ORDER,
        });
    }
    Ok(())
}

/// T-forest test by listing every simple cycle.
pub fn naive_is_t_forest(graph: &Graph, terminals: &VertexSet) -> Result<bool> {
    naive_guard(graph)?;
    Ok(!any_simple_cycle(graph, |c| {
        c.iter().any(|&v| terminals.contains(v))
    }))
}

/// T-bipartite test by listing every simple cycle.
pub fn naive_is_t_bipartite(graph: &Graph, terminals: &VertexSet) -> Result<bool> {
    naive_guard(graph)?;
    Ok(!any_simple_cycle(graph, |c| {
        c.len() % 2 == 1 && c.iter().any(|&v| terminals.contains(v))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::validity::Problem;

    #[test]
    fn house_needs_one_vertex() {
        assert_eq!(brute_force_minimum_size(&fixtures::house()).unwrap(), 1);
    }

    #[test]
    fn k4_sfvs_needs_two() {
        let g = Graph::complete(4);
        let inst = Instance::new(g.clone(), g.all_vertices(), Problem::Sfvs).unwrap();
        let sol = brute_force_minimum(&inst).unwrap();
        assert_eq!(sol.set.to_vec(), vec![0, 1]);
    }

    #[test]
    fn no_terminals_no_work() {
        let g = Graph::complete(5);
        for p in Problem::ALL {
            let inst = Instance::new(g.clone(), g.empty_set(), p).unwrap();
            assert!(brute_force_minimum(&inst).unwrap().set.is_empty());
        }
    }

    #[test]
    fn too_large() {
        let g = Graph::empty(25);
        let inst = Instance::new(g.clone(), g.empty_set(), Problem::Svc).unwrap();
        assert!(matches!(
            brute_force_minimum(&inst),
            Err(Error::InstanceTooLarge { n: 25, .. })
        ));
        assert!(naive_is_t_forest(&Graph::empty(13), &VertexSet::new(13)).is_err());
    }

    #[test]
    fn naive_checkers() {
        let c6 = Graph::cycle(6);
        let t = VertexSet::singleton(6, 0);
        assert!(!naive_is_t_forest(&c6, &t).unwrap());
        assert!(naive_is_t_bipartite(&c6, &t).unwrap());
        let p = fixtures::petersen().graph;
        assert!(!naive_is_t_bipartite(&p, &p.all_vertices()).unwrap());
        let tree = Graph::star(5);
        assert!(naive_is_t_forest(&tree, &tree.all_vertices()).unwrap());
        assert!(naive_is_t_bipartite(&tree, &tree.all_vertices()).unwrap());
    }

    #[test]
    fn minimum_vertex_cover_of_p4() {
        assert_eq!(minimum_vertex_cover(&Graph::path(4)).unwrap().len(), 2);
    }
}
