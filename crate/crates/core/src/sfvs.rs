//! Subset feedback vertex set on `(sP1+P3)`-free graphs.
//!
//! A minimum solution `S` leaves a maximum T-forest `F = V \ S`. The solver
//! tries three shapes for the terminal part `G[F ∩ T]` and keeps the best:
//!
//! 1. at least `2s` components: guess `2s` of them (each a vertex or an
//!    edge, since `G[F ∩ T]` is `P3`-free there) and their few surviving
//!    neighbours; everything far from them is a union of cliques;
//! 2. fewer than `2s` components, all small: guess `F ∩ T` and `S \ T`
//!    outright;
//! 3. fewer than `2s` components, one large: that component is a
//!    subdivided star, and guessing its core pins down the rest.
//!
//! Every candidate is re-checked with [`is_t_forest_within`] before it is
//! compared, so a guess that breaks an assumption can only be skipped.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{find_induced, require_free, PatternGraph};
use crate::set::{smaller_solution, VertexSet};
use crate::validity::{is_t_forest_within, Instance, Problem, Solution};

/// Largest terminal component size in the few-components case.
pub fn small_component_limit(s: usize) -> usize {
    7.max((4 * s).saturating_sub(2))
}

/// Size of the guessed core of a large terminal tree.
pub fn large_core_size(s: usize) -> usize {
    8.max((4 * s).saturating_sub(1))
}

/// Shape of an `(sP1+P3)`-free tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeShape {
    /// At most [`small_component_limit`] vertices.
    Small,
    /// A star around `center` whose arms have length one or two.
    Star {
        center: usize,
        /// Neighbours of the centre with no other neighbour.
        leaves: Vec<usize>,
        /// Neighbours of the centre with exactly one further neighbour.
        subdivided: Vec<usize>,
        /// Vertices at distance two, one per subdivided arm.
        outer: Vec<usize>,
    },
}

pub fn classify_tree_sp1p3(tree: &Graph, s: usize) -> Result<TreeShape> {
    let n = tree.order();
    let all = tree.all_vertices();
    if n == 0 || !tree.is_connected_within(&all) || tree.size() + 1 != n {
        return Err(Error::NotATree);
    }
    require_free(tree, &PatternGraph::sp1_p3(s))?;
    if n <= small_component_limit(s) {
        return Ok(TreeShape::Small);
    }
    let high: Vec<usize> = tree.vertices().filter(|&v| tree.degree(v) > 2).collect();
    let [center] = high[..] else {
        return Err(Error::PreconditionViolated(format!(
            "large tree has {} vertices of degree above two",
            high.len()
        )));
    };
    let mut leaves = Vec::new();
    let mut subdivided = Vec::new();
    let mut outer = Vec::new();
    for &v in tree.neighbors(center) {
        match tree.degree(v) {
            1 => leaves.push(v),
            _ => {
                subdivided.push(v);
                outer.extend(tree.neighbors(v).iter().copied().filter(|&w| w != center));
            }
        }
    }
    if subdivided.len() + 1 > s.max(1) || outer.iter().any(|&w| tree.degree(w) != 1) {
        return Err(Error::PreconditionViolated(
            "large tree is not a star with at most s-1 arms of length two".into(),
        ));
    }
    Ok(TreeShape::Star {
        center,
        leaves,
        subdivided,
        outer,
    })
}

/// Minimum T-feedback vertex set containing `partial` and disjoint from
/// `fixed \ partial`, when the free part `Z = V \ fixed` induces a disjoint
/// union of cliques with at most one kept neighbour outside.
pub fn sfvs_extend_p3free(
    graph: &Graph,
    terminals: &VertexSet,
    fixed: &VertexSet,
    partial: &VertexSet,
) -> Result<Solution> {
    let set = extend_over_cliques(graph, terminals, fixed, partial)?;
    let inst = Instance {
        graph: graph.clone(),
        terminals: terminals.clone(),
        problem: Problem::Sfvs,
        s: None,
    };
    Ok(Solution::checked(&inst, set))
}

pub(crate) fn extend_over_cliques(
    graph: &Graph,
    terminals: &VertexSet,
    fixed: &VertexSet,
    partial: &VertexSet,
) -> Result<VertexSet> {
    if !partial.is_subset(fixed) {
        return Err(Error::PreconditionViolated(
            "partial solution is not inside the fixed part".into(),
        ));
    }
    let kept = fixed.difference(partial);
    if !is_t_forest_within(graph, &kept, terminals) {
        return Err(Error::PreconditionViolated(
            "partial solution leaves a T-cycle in the fixed part".into(),
        ));
    }
    let free = fixed.complement();
    let pieces = graph.components_within(&free);
    if let Some(piece) = pieces.iter().find(|p| !graph.is_clique(p)) {
        return Err(Error::PreconditionViolated(format!(
            "free part contains an induced P3 near {:?}",
            piece.first()
        )));
    }
    let attach = graph.open_neighborhood(&free).intersection(&kept);
    if attach.len() > 1 {
        return Err(Error::PreconditionViolated(format!(
            "free part has {} kept neighbours",
            attach.len()
        )));
    }
    let mut solution = partial.clone();
    for piece in &pieces {
        let keep = best_clique_part(graph, terminals, piece, &attach);
        solution.union_with(&piece.difference(&keep));
    }
    Ok(solution)
}

/// A largest subset `U'` of the clique `piece` such that `U'` plus the kept
/// neighbours of `piece` has no T-cycle.
fn best_clique_part(
    graph: &Graph,
    terminals: &VertexSet,
    piece: &VertexSet,
    attach: &VertexSet,
) -> VertexSet {
    let n = graph.order();
    let members = piece.to_vec();
    let neighbours = graph.open_neighborhood(piece).intersection(attach);
    let plain = piece.difference(terminals);
    let pair_with = |u: usize| -> VertexSet {
        let other = members
            .iter()
            .copied()
            .find(|&w| w != u)
            .expect("two members");
        VertexSet::from_vertices(n, [u, other])
    };
    let y = neighbours.first();
    match y.filter(|&y| terminals.contains(y)) {
        None => {
            if members.len() == 1 {
                piece.clone()
            } else if plain.len() >= 2 {
                plain
            } else if let Some(&u) = members
                .iter()
                .find(|&&u| graph.neighborhood(u).is_disjoint(&neighbours))
            {
                pair_with(u)
            } else {
                VertexSet::singleton(n, members[0])
            }
        }
        Some(y) => {
            let near = piece.intersection(graph.neighborhood(y));
            let far = piece.difference(&near);
            let far_plain = far.difference(terminals);
            if far_plain.len() >= 2 {
                let mut keep = far_plain;
                if let Some(u) = near.difference(terminals).first() {
                    keep.insert(u);
                }
                keep
            } else if let (Some(u), true) = (far.first(), members.len() >= 2) {
                pair_with(u)
            } else if members.len() == 1 {
                piece.clone()
            } else {
                VertexSet::singleton(n, members[0])
            }
        }
    }
}

/// The three guessing strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SfvsCase {
    ManyComponents,
    FewSmallComponents,
    LargeComponent,
}

impl SfvsCase {
    pub fn index(self) -> usize {
        match self {
            SfvsCase::ManyComponents => 0,
            SfvsCase::FewSmallComponents => 1,
            SfvsCase::LargeComponent => 2,
        }
    }
}

impl fmt::Display for SfvsCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SfvsCase::ManyComponents => "many-components",
            SfvsCase::FewSmallComponents => "few-small-components",
            SfvsCase::LargeComponent => "large-component",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SfvsStats {
    /// Strategy that produced the returned set.
    pub winner: Option<SfvsCase>,
    /// Guesses that passed every filter, per strategy.
    pub guesses: [u64; 3],
    /// Candidates that failed the final T-forest check, per strategy.
    pub rejected: [u64; 3],
}

#[derive(Clone, Debug)]
pub struct SfvsReport {
    pub solution: Solution,
    pub stats: SfvsStats,
}

struct Search<'a> {
    graph: &'a Graph,
    terminals: &'a VertexSet,
    s: usize,
    best: Option<VertexSet>,
    stats: SfvsStats,
}

impl Search<'_> {
    fn offer(&mut self, case: SfvsCase, candidate: VertexSet) {
        let i = case.index();
        self.stats.guesses[i] += 1;
        if !is_t_forest_within(self.graph, &candidate.complement(), self.terminals) {
            self.stats.rejected[i] += 1;
            return;
        }
        let better = self
            .best
            .as_ref()
            .is_none_or(|b| smaller_solution(&candidate, b).is_lt());
        if better {
            self.best = Some(candidate);
            self.stats.winner = Some(case);
        }
    }

    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.len())
    }
}

/// Minimum T-feedback vertex set of an `(sP1+P3)`-free graph.
pub fn sfvs_sp1p3free(graph: &Graph, terminals: &VertexSet, s: usize) -> Result<SfvsReport> {
    require_free(graph, &PatternGraph::sp1_p3(s))?;
    let mut search = Search {
        graph,
        terminals,
        s,
        best: None,
        stats: SfvsStats::default(),
    };
    many_components(&mut search);
    if s >= 1 {
        few_small_components(&mut search);
        large_component(&mut search);
    }
    let set = search.best.take().unwrap_or_else(|| terminals.clone());
    let inst = Instance {
        graph: graph.clone(),
        terminals: terminals.clone(),
        problem: Problem::Sfvs,
        s: Some(s),
    };
    Ok(SfvsReport {
        solution: Solution::checked(&inst, set),
        stats: search.stats,
    })
}

/// Terminal vertices and terminal edges, as candidate components.
fn terminal_units(graph: &Graph, terminals: &VertexSet) -> Vec<Vec<usize>> {
    let mut units: Vec<Vec<usize>> = terminals.iter().map(|v| vec![v]).collect();
    units.extend(
        graph
            .edges()
            .filter(|&(u, v)| terminals.contains(u) && terminals.contains(v))
            .map(|(u, v)| vec![u, v]),
    );
    units.sort();
    units
}

/// Calls `visit` on every choice of `k` units that are pairwise disjoint and
/// non-adjacent, so that they are exactly the components of their union.
fn choose_units(
    graph: &Graph,
    units: &[Vec<usize>],
    k: usize,
    visit: &mut dyn FnMut(&[usize], &VertexSet),
) {
    #[allow(clippy::too_many_arguments)]
    fn go(
        graph: &Graph,
        units: &[Vec<usize>],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        covered: &VertexSet,
        reach: &VertexSet,
        visit: &mut dyn FnMut(&[usize], &VertexSet),
    ) {
        if chosen.len() == k {
            visit(chosen, covered);
            return;
        }
        for i in start..units.len() {
            if units.len() - i < k - chosen.len() {
                break;
            }
            if units[i].iter().any(|&v| reach.contains(v)) {
                continue;
            }
            let mut covered2 = covered.clone();
            let mut reach2 = reach.clone();
            for &v in &units[i] {
                covered2.insert(v);
                reach2.insert(v);
                reach2.union_with(graph.neighborhood(v));
            }
            chosen.push(i);
            go(graph, units, k, i + 1, chosen, &covered2, &reach2, visit);
            chosen.pop();
        }
    }
    let empty = graph.empty_set();
    go(graph, units, k, 0, &mut Vec::new(), &empty, &empty, visit);
}

fn many_components(search: &mut Search) {
    let graph = search.graph;
    let terminals = search.terminals;
    let s = search.s;
    let units = terminal_units(graph, terminals);
    let mut candidates: Vec<VertexSet> = Vec::new();
    choose_units(graph, &units, 2 * s, &mut |chosen, core| {
        let comps: Vec<&Vec<usize>> = chosen.iter().map(|&i| &units[i]).collect();
        let around = graph.open_neighborhood(core);
        let pool = around.difference(terminals).to_vec();
        let fixed = core.union(&around);
        for k in 0..=(2 * s + 1).min(pool.len()) {
            for picked in pool.iter().copied().combinations(k) {
                let survivors = VertexSet::from_vertices(graph.order(), picked.iter().copied());
                if !neighbour_claims_hold(graph, &comps, core, &survivors, s) {
                    continue;
                }
                let kept = core.union(&survivors);
                if !is_t_forest_within(graph, &kept, terminals) {
                    continue;
                }
                let partial = around.difference(&survivors);
                if let Ok(set) = extend_over_cliques(graph, terminals, &fixed, &partial) {
                    candidates.push(set);
                }
            }
        }
    });
    for c in candidates {
        search.offer(SfvsCase::ManyComponents, c);
    }
}

/// Necessary conditions on the surviving neighbours of `2s` terminal
/// components in an `(sP1+P3)`-free graph.
fn neighbour_claims_hold(
    graph: &Graph,
    comps: &[&Vec<usize>],
    core: &VertexSet,
    survivors: &VertexSet,
    s: usize,
) -> bool {
    let mut single = graph.empty_set();
    let mut multi = 0;
    for y in survivors.iter() {
        if graph.neighborhood(y).intersection_len(core) >= 2 {
            multi += 1;
        } else {
            single.insert(y);
        }
    }
    if multi > 1 {
        return false;
    }
    for comp in comps {
        let touching = single
            .iter()
            .filter(|&y| comp.iter().any(|&a| graph.has_edge(a, y)))
            .count();
        if touching > 1 || (comp.len() == 2 && touching > 0) {
            return false;
        }
    }
    // Two adjacent single-neighbour survivors with different anchors form a
    // P3 with one anchor, and the other 2s-2 components supply s isolated
    // vertices only when s >= 2.
    s < 2 || graph.is_independent(&single)
}

fn few_small_components(search: &mut Search) {
    let graph = search.graph;
    let terminals = search.terminals;
    let s = search.s;
    let limit = small_component_limit(s);
    let max_f = ((2 * s - 1) * limit).min(terminals.len());
    let term = terminals.to_vec();
    let others = terminals.complement().to_vec();
    for f in 0..=max_f {
        for kept in term.iter().copied().combinations(f) {
            let kept = VertexSet::from_vertices(graph.order(), kept);
            if !graph.is_forest_within(&kept) {
                continue;
            }
            let comps = graph.components_within(&kept);
            if comps.len() > 2 * s - 1 || comps.iter().any(|c| c.len() > limit) {
                continue;
            }
            let dropped = terminals.difference(&kept);
            for k in 0..=f.min(others.len()) {
                if dropped.len() + k >= search.best_len() {
                    break;
                }
                let found = others.iter().copied().combinations(k).find_map(|extra| {
                    let mut cand = dropped.clone();
                    for v in extra {
                        cand.insert(v);
                    }
                    is_t_forest_within(graph, &cand.complement(), terminals).then_some(cand)
                });
                if let Some(cand) = found {
                    search.offer(SfvsCase::FewSmallComponents, cand);
                    break;
                }
            }
        }
    }
}

fn large_component(search: &mut Search) {
    let graph = search.graph;
    let terminals = search.terminals;
    let s = search.s;
    let core_size = large_core_size(s);
    if terminals.len() < core_size {
        return;
    }
    let mut candidates = Vec::new();
    for core in terminals.iter().combinations(core_size) {
        let core = VertexSet::from_vertices(graph.order(), core);
        if graph.edges_within(&core) + 1 != core_size || !graph.is_connected_within(&core) {
            continue;
        }
        let pool = graph
            .open_neighborhood(&core)
            .difference(terminals)
            .to_vec();
        for k in 0..=(s - 1).min(pool.len()) {
            for outer in pool.iter().copied().combinations(k) {
                let outer = VertexSet::from_vertices(graph.order(), outer);
                let tree = core.union(&outer);
                let Some(centre) = star_centre(graph, &tree, &core, &outer, s) else {
                    continue;
                };
                let mut arms = tree.clone();
                arms.remove(centre);
                let around = graph.open_neighborhood(&arms);
                let mut partial = around.clone();
                partial.remove(centre);
                let fixed = arms.union(&around);
                if let Ok(set) = extend_over_cliques(graph, terminals, &fixed, &partial) {
                    candidates.push(set);
                }
            }
        }
    }
    for c in candidates {
        search.offer(SfvsCase::LargeComponent, c);
    }
}

/// The centre of `tree` if it is a tree with one vertex of degree above two,
/// that vertex in `core`, at most `s - 1` vertices at distance two, all of
/// them leaves, and every vertex of `outer` among them.
fn star_centre(
    graph: &Graph,
    tree: &VertexSet,
    core: &VertexSet,
    outer: &VertexSet,
    s: usize,
) -> Option<usize> {
    if graph.edges_within(tree) + 1 != tree.len() || !graph.is_connected_within(tree) {
        return None;
    }
    let mut high = tree.iter().filter(|&v| graph.degree_within(v, tree) > 2);
    let centre = high.next()?;
    if high.next().is_some() || !core.contains(centre) {
        return None;
    }
    let dist = distances_within(graph, tree, centre);
    let far: Vec<usize> = tree.iter().filter(|&v| dist[v] == 2).collect();
    let far_ok = far.len() < s && far.iter().all(|&v| graph.degree_within(v, tree) == 1);
    let outer_ok = outer.iter().all(|v| dist[v] == 2);
    (far_ok && outer_ok && tree.iter().all(|v| dist[v] <= 2)).then_some(centre)
}

fn distances_within(graph: &Graph, alive: &VertexSet, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; graph.order()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if alive.contains(w) && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Least `s <= s_max` for which `graph` is `(sP1+P3)`-free.
pub fn detect_s(graph: &Graph, s_max: usize) -> Option<usize> {
    (0..=s_max).find(|&s| find_induced(graph, &PatternGraph::sp1_p3(s)).is_none())
}
