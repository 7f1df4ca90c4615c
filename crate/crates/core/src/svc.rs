//! Subset vertex cover on cographs and on `(sP1+P4)`-free graphs.

use crate::error::Result;
use crate::graph::Graph;
use crate::recognition::{require_cograph, require_free, Cotree, CotreeNode, PatternGraph};
use crate::set::{smaller_solution, VertexSet};
use crate::validity::{Instance, Problem, Solution};

/// For every cotree node `x`, a minimum `(T ∩ V(G_x))`-vertex cover of `G_x`.
///
/// A union node combines its children's covers. At a join node terminals
/// can survive on at most one side, and if they survive on one side the
/// whole other side must go, so the minimum is the smallest of: left cover
/// plus all of the right side, right cover plus all of the left side, or
/// every terminal below the node. Earlier candidates win ties.
pub fn svc_cotree_table(tree: &Cotree, terminals: &VertexSet) -> Vec<VertexSet> {
    let n = terminals.capacity();
    let mut table: Vec<VertexSet> = Vec::with_capacity(tree.nodes().len());
    for (x, node) in tree.nodes().iter().enumerate() {
        let best = match *node {
            CotreeNode::Leaf(_) => VertexSet::new(n),
            CotreeNode::Union(y, z) => table[y].union(&table[z]),
            CotreeNode::Join(y, z) => {
                let candidates = [
                    table[y].union(tree.vertices_below(z)),
                    table[z].union(tree.vertices_below(y)),
                    terminals.intersection(tree.vertices_below(x)),
                ];
                first_smallest(candidates)
            }
        };
        table.push(best);
    }
    table
}

/// The smallest set by size, the earliest among equals.
pub(crate) fn first_smallest<I: IntoIterator<Item = VertexSet>>(candidates: I) -> VertexSet {
    let mut best: Option<VertexSet> = None;
    for c in candidates {
        if best.as_ref().is_none_or(|b| c.len() < b.len()) {
            best = Some(c);
        }
    }
    best.expect("at least one candidate")
}

fn cograph_cover(graph: &Graph, terminals: &VertexSet) -> Result<VertexSet> {
    if graph.order() == 0 {
        return Ok(VertexSet::new(0));
    }
    let tree = require_cograph(graph)?;
    let table = svc_cotree_table(&tree, terminals);
    Ok(table[tree.root()].clone())
}

/// Minimum T-vertex cover of a cograph.
pub fn svc_p4free(graph: &Graph, terminals: &VertexSet) -> Result<Solution> {
    let cover = cograph_cover(graph, terminals)?;
    Ok(checked(graph, terminals, cover))
}

fn checked(graph: &Graph, terminals: &VertexSet, cover: VertexSet) -> Solution {
    let inst = Instance {
        graph: graph.clone(),
        terminals: terminals.clone(),
        problem: Problem::Svc,
        s: None,
    };
    Solution::checked(&inst, cover)
}

/// One branch of [`svc_extension_branch`]: the terminal kept out of the
/// cover and the cover built around it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub kept: usize,
    pub cover: VertexSet,
}

/// Covers obtained by keeping each terminal `u` out of the solution: then
/// `N(u)` must be taken, and the rest is a cover of `G - N[u]` found by
/// `inner`.
pub fn svc_branches<F>(graph: &Graph, terminals: &VertexSet, mut inner: F) -> Result<Vec<Branch>>
where
    F: FnMut(&Graph, &VertexSet) -> Result<VertexSet>,
{
    let mut branches = Vec::with_capacity(terminals.len());
    for u in terminals.iter() {
        let closed = graph.closed_neighborhood(&VertexSet::singleton(graph.order(), u));
        let rest = closed.complement();
        let (sub, old_of_new) = graph.induced_subgraph(&rest);
        let sub_terminals = VertexSet::from_vertices(
            sub.order(),
            (0..sub.order()).filter(|&i| terminals.contains(old_of_new[i])),
        );
        let sub_cover = inner(&sub, &sub_terminals)?;
        let mut cover = graph.neighborhood(u).clone();
        for i in sub_cover.iter() {
            cover.insert(old_of_new[i]);
        }
        branches.push(Branch { kept: u, cover });
    }
    Ok(branches)
}

/// Minimum T-vertex cover given a solver for the graphs `G - N[u]`: the
/// smallest branch from [`svc_branches`], or `T` itself.
pub fn svc_extension_branch<F>(graph: &Graph, terminals: &VertexSet, inner: F) -> Result<VertexSet>
where
    F: FnMut(&Graph, &VertexSet) -> Result<VertexSet>,
{
    let branches = svc_branches(graph, terminals, inner)?;
    Ok(branches
        .into_iter()
        .map(|b| b.cover)
        .chain(std::iter::once(terminals.clone()))
        .min_by(smaller_solution)
        .expect("terminal set is always a candidate"))
}

/// Minimum T-vertex cover of an `(sP1+P4)`-free graph, branching `s`
/// levels deep down to cographs.
pub fn svc_sp1p4free(graph: &Graph, terminals: &VertexSet, s: usize) -> Result<Solution> {
    require_free(graph, &PatternGraph::sp1_p4(s))?;
    let cover = nested_cover(graph, terminals, s)?;
    Ok(checked(graph, terminals, cover))
}

fn nested_cover(graph: &Graph, terminals: &VertexSet, s: usize) -> Result<VertexSet> {
    if s == 0 {
        cograph_cover(graph, terminals)
    } else {
        svc_extension_branch(graph, terminals, |g, t| nested_cover(g, t, s - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::oracle::brute_force_minimum_size;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn star_with_terminal_leaves() {
        let g = Graph::star(3);
        let sol = svc_p4free(&g, &set(4, &[1, 2, 3])).unwrap();
        assert_eq!(sol.set.to_vec(), vec![0]);
        assert!(sol.validated);
    }

    #[test]
    fn k3_with_one_terminal() {
        let g = Graph::complete(3);
        assert_eq!(svc_p4free(&g, &set(3, &[0])).unwrap().size(), 1);
    }

    #[test]
    fn no_terminals() {
        let g = Graph::complete(4);
        assert!(svc_p4free(&g, &set(4, &[])).unwrap().set.is_empty());
    }

    #[test]
    fn p4_is_rejected_with_witness() {
        match svc_p4free(&Graph::path(4), &set(4, &[0])) {
            Err(Error::NotInClass(v)) => assert_eq!(v.witness.len(), 4),
            other => panic!("expected NotInClass, got {other:?}"),
        }
    }

    #[test]
    fn p5_with_one_branch_level() {
        // P5 contains P4 but no P1+P4.
        let g = Graph::path(5);
        let t = set(5, &[0, 2, 4]);
        let sol = svc_sp1p4free(&g, &t, 1).unwrap();
        let inst = Instance::new(g.clone(), t.clone(), Problem::Svc).unwrap();
        assert_eq!(sol.size(), brute_force_minimum_size(&inst).unwrap());
        assert!(sol.validated);
        assert!(svc_sp1p4free(&Graph::path(6), &set(6, &[0]), 0).is_err());
    }

    #[test]
    fn branches_take_the_neighbourhood_and_skip_the_vertex() {
        let g = Graph::path(5);
        let t = set(5, &[1, 3]);
        let branches = svc_branches(&g, &t, |sub, st| svc_p4free(sub, st).map(|s| s.set)).unwrap();
        for b in branches {
            assert!(g.neighborhood(b.kept).is_subset(&b.cover));
            assert!(!b.cover.contains(b.kept));
        }
    }
}
