//! Subset odd cycle transversal on cographs and on `(sP1+P3)`-free graphs.
//!
//! Both solvers look for a largest T-bipartite induced subgraph `B` and
//! return its complement.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;

use crate::error::Result;
use crate::graph::Graph;
use crate::recognition::{require_cograph, require_free, Cotree, CotreeNode, PatternGraph};
use crate::set::{smaller_solution, VertexSet};
use crate::svc::svc_cotree_table;
use crate::validity::{is_t_bipartite_within, Instance, Problem, Solution};

/// Number of join-node candidates in the cograph dynamic programme.
pub const JOIN_CANDIDATES: usize = 7;

/// How often each join-node candidate was the one kept.
///
/// Indices: `0` left solution plus the whole right side, `1` the mirror
/// image, `2` every terminal below the node, `3` the union of the two
/// sides' T-vertex covers, `4` both sides reduced to maximum independent
/// sets, `5` left T-vertex cover with one right non-terminal kept, `6` the
/// mirror image of `5`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JoinStats {
    pub wins: [u64; JOIN_CANDIDATES],
}

#[derive(Clone, Debug)]
pub struct CographReport {
    pub solution: Solution,
    pub join_stats: JoinStats,
}

/// For every cotree node, a maximum independent set of `G_x`.
fn independent_table(tree: &Cotree, n: usize) -> Vec<VertexSet> {
    let mut table: Vec<VertexSet> = Vec::with_capacity(tree.nodes().len());
    for node in tree.nodes() {
        let best = match *node {
            CotreeNode::Leaf(v) => VertexSet::singleton(n, v),
            CotreeNode::Union(y, z) => table[y].union(&table[z]),
            CotreeNode::Join(y, z) => {
                if table[z].len() > table[y].len() {
                    table[z].clone()
                } else {
                    table[y].clone()
                }
            }
        };
        table.push(best);
    }
    table
}

/// Minimum odd T-cycle transversal of a cograph.
///
/// At a join node `x = y ⊗ z`, let `B` be what survives. If `B` misses one
/// side, the other side needs its own optimum. If `B` meets both sides and
/// holds no terminal, all terminals below `x` are removed. Otherwise a
/// surviving terminal sees every survivor on the other side, which forces
/// one of: both sides independent; or one side a single non-terminal and
/// the other side free of edges at terminals (a T-vertex cover removed).
/// The union of the two T-vertex covers is also tried, but it is only
/// valid when it happens to fall in one of those shapes, so every join
/// candidate is checked before it is compared. Earlier candidates win ties.
pub fn soct_p4free(graph: &Graph, terminals: &VertexSet) -> Result<CographReport> {
    let n = graph.order();
    let mut join_stats = JoinStats::default();
    let set = if n == 0 {
        VertexSet::new(0)
    } else {
        let tree = require_cograph(graph)?;
        let covers = svc_cotree_table(&tree, terminals);
        let independent = independent_table(&tree, n);
        let mut table: Vec<VertexSet> = Vec::with_capacity(tree.nodes().len());
        for (x, node) in tree.nodes().iter().enumerate() {
            let best = match *node {
                CotreeNode::Leaf(_) => VertexSet::new(n),
                CotreeNode::Union(y, z) => table[y].union(&table[z]),
                CotreeNode::Join(y, z) => {
                    let below = tree.vertices_below(x);
                    let (vy, vz) = (tree.vertices_below(y), tree.vertices_below(z));
                    let keep_one = |side: &VertexSet| -> Option<VertexSet> {
                        side.difference(terminals).first().map(|c| {
                            let mut rest = side.clone();
                            rest.remove(c);
                            rest
                        })
                    };
                    let candidates: [Option<VertexSet>; JOIN_CANDIDATES] = [
                        Some(table[y].union(vz)),
                        Some(table[z].union(vy)),
                        Some(terminals.intersection(below)),
                        Some(covers[y].union(&covers[z])),
                        Some(below.difference(&independent[y].union(&independent[z]))),
                        keep_one(vz).map(|r| covers[y].union(&r)),
                        keep_one(vy).map(|r| covers[z].union(&r)),
                    ];
                    let mut best: Option<(usize, VertexSet)> = None;
                    for (i, c) in candidates.into_iter().enumerate() {
                        let Some(c) = c else { continue };
                        if best.as_ref().is_some_and(|(_, b)| c.len() >= b.len()) {
                            continue;
                        }
                        if is_t_bipartite_within(graph, &below.difference(&c), terminals) {
                            best = Some((i, c));
                        }
                    }
                    let (i, c) = best.expect("all terminals below is always valid");
                    join_stats.wins[i] += 1;
                    c
                }
            };
            table.push(best);
        }
        table[tree.root()].clone()
    };
    Ok(CographReport {
        solution: checked(graph, terminals, set, None),
        join_stats,
    })
}

fn checked(graph: &Graph, terminals: &VertexSet, set: VertexSet, s: Option<usize>) -> Solution {
    let inst = Instance {
        graph: graph.clone(),
        terminals: terminals.clone(),
        problem: Problem::Soct,
        s,
    };
    Solution::checked(&inst, set)
}

/// Size of the guessed independent terminal set in the large-terminal case.
pub fn anchor_size(s: usize) -> usize {
    2.max((2 * s).saturating_sub(1))
}

/// Largest terminal part handled by the small-terminal case.
pub fn small_terminal_limit(s: usize) -> usize {
    3.max((4 * s).saturating_sub(3))
}

/// Bound on `|Y|` separating the two large-terminal subcases.
pub fn neighbour_split(s: usize) -> usize {
    4.max(3 * s)
}

/// Size of the guessed set of shared neighbours in the many-neighbours case.
pub fn shared_size(s: usize) -> usize {
    2.max(s + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SoctCase {
    /// At most `max{3, 4s-3}` terminals survive.
    SmallTerminalPart,
    /// Many terminals survive and an independent anchor set of them has few
    /// surviving neighbours.
    FewNeighbours,
    /// Many terminals survive and the anchor set has many surviving
    /// neighbours.
    ManyNeighbours,
}

impl SoctCase {
    pub fn index(self) -> usize {
        match self {
            SoctCase::SmallTerminalPart => 0,
            SoctCase::FewNeighbours => 1,
            SoctCase::ManyNeighbours => 2,
        }
    }
}

impl fmt::Display for SoctCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SoctCase::SmallTerminalPart => "small-terminal-part",
            SoctCase::FewNeighbours => "few-neighbours",
            SoctCase::ManyNeighbours => "many-neighbours",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SoctStats {
    pub winner: Option<SoctCase>,
    /// Complete guesses that produced a candidate, per case.
    pub guesses: [u64; 3],
    /// Candidates that failed the final T-bipartite check, per case.
    pub rejected: [u64; 3],
}

#[derive(Clone, Debug)]
pub struct SoctReport {
    pub solution: Solution,
    pub stats: SoctStats,
}

/// The guessed structure behind one candidate of the large-terminal cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoctCaseContext {
    /// Independent terminals assumed to survive.
    pub anchors: VertexSet,
    /// Surviving neighbours of the anchors with exactly one anchor neighbour.
    pub single: VertexSet,
    /// Surviving neighbours of the anchors with two or more.
    pub shared: VertexSet,
    /// Vertices at distance at least two from the anchors.
    pub far: VertexSet,
    /// Surviving vertices of `far`.
    pub far_kept: VertexSet,
}

impl SoctCaseContext {
    pub fn kept(&self) -> VertexSet {
        self.anchors
            .union(&self.single)
            .union(&self.shared)
            .union(&self.far_kept)
    }
}

struct Search<'a> {
    graph: &'a Graph,
    terminals: &'a VertexSet,
    s: usize,
    best: Option<VertexSet>,
    stats: SoctStats,
}

impl Search<'_> {
    fn offer(&mut self, case: SoctCase, kept: &VertexSet) {
        let i = case.index();
        self.stats.guesses[i] += 1;
        if !is_t_bipartite_within(self.graph, kept, self.terminals) {
            self.stats.rejected[i] += 1;
            return;
        }
        let candidate = kept.complement();
        if self
            .best
            .as_ref()
            .is_none_or(|b| smaller_solution(&candidate, b).is_lt())
        {
            self.best = Some(candidate);
            self.stats.winner = Some(case);
        }
    }

    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.len())
    }
}

/// Minimum odd T-cycle transversal of an `(sP1+P3)`-free graph.
pub fn soct_sp1p3free(graph: &Graph, terminals: &VertexSet, s: usize) -> Result<SoctReport> {
    require_free(graph, &PatternGraph::sp1_p3(s))?;
    let mut search = Search {
        graph,
        terminals,
        s,
        best: None,
        stats: SoctStats::default(),
    };
    small_terminal_part(&mut search);
    for ctx in few_neighbours_guesses(graph, terminals, s) {
        search.offer(SoctCase::FewNeighbours, &ctx.kept());
    }
    for ctx in many_neighbours_guesses(graph, terminals, s) {
        search.offer(SoctCase::ManyNeighbours, &ctx.kept());
    }
    let set = search.best.take().unwrap_or_else(|| terminals.clone());
    Ok(SoctReport {
        solution: checked(graph, terminals, set, Some(s)),
        stats: search.stats,
    })
}

/// Keeps every non-terminal except a few and at most
/// [`small_terminal_limit`] terminals.
fn small_terminal_part(search: &mut Search) {
    let graph = search.graph;
    let terminals = search.terminals;
    let plain = terminals.complement();
    search.offer(SoctCase::SmallTerminalPart, &plain);
    let others = plain.to_vec();
    let limit = small_terminal_limit(search.s).min(terminals.len());
    for size in 1..=limit {
        for chosen in terminals.iter().combinations(size) {
            let chosen = VertexSet::from_vertices(graph.order(), chosen);
            if !graph.is_bipartite_within(&chosen) {
                continue;
            }
            let base = chosen.union(&plain);
            for k in 0..size.min(others.len() + 1) {
                if terminals.len() - size + k >= search.best_len() {
                    break;
                }
                let found = others.iter().copied().combinations(k).find_map(|drop| {
                    let mut kept = base.clone();
                    for v in drop {
                        kept.remove(v);
                    }
                    is_t_bipartite_within(graph, &kept, terminals).then_some(kept)
                });
                if let Some(kept) = found {
                    search.offer(SoctCase::SmallTerminalPart, &kept);
                    break;
                }
            }
        }
    }
}

/// Independent subsets of `pool` of size `k`, as sorted vertex lists.
fn independent_subsets(graph: &Graph, pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        graph: &Graph,
        pool: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - chosen.len() {
                break;
            }
            let v = pool[i];
            if chosen.iter().any(|&c| graph.has_edge(c, v)) {
                continue;
            }
            chosen.push(v);
            go(graph, pool, k, i + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    go(graph, pool, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether two neighbours of the anchors with one anchor neighbour each
/// may both survive: they must not share that neighbour, and for `s` in
/// `{1, 2}` they may be adjacent (the anchors left over cannot supply `s`
/// isolated vertices for an induced `sP1+P3`).
fn singles_compatible(graph: &Graph, anchors: &VertexSet, a: usize, b: usize, s: usize) -> bool {
    let shared_anchor = !graph
        .neighborhood(a)
        .intersection(anchors)
        .is_disjoint(graph.neighborhood(b));
    if shared_anchor {
        return false;
    }
    !(s == 0 || s >= 3) || !graph.has_edge(a, b)
}

/// Whether two neighbours with several anchor neighbours each may both
/// survive: non-adjacent and sharing an anchor.
fn shared_compatible(graph: &Graph, anchors: &VertexSet, a: usize, b: usize) -> bool {
    !graph.has_edge(a, b)
        && !graph
            .neighborhood(a)
            .intersection(anchors)
            .is_disjoint(graph.neighborhood(b))
}

/// Subsets of `pool` of size at most `max` whose members are pairwise
/// `compatible`.
fn compatible_subsets(
    pool: &[usize],
    max: usize,
    compatible: &dyn Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    fn go(
        pool: &[usize],
        max: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(chosen.clone());
        if chosen.len() == max {
            return;
        }
        for i in start..pool.len() {
            let v = pool[i];
            if chosen.iter().all(|&c| compatible(c, v)) {
                chosen.push(v);
                go(pool, max, i + 1, chosen, compatible, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pool, max, 0, &mut Vec::new(), compatible, &mut out);
    out
}

/// Guesses for the case where an independent anchor set `A ⊆ T` of size
/// [`anchor_size`] survives with fewer than [`neighbour_split`] surviving
/// neighbours `Y`. Everything at distance two or more from `A` is a union
/// of cliques attached only to `Y`; each clique is completed on its own.
pub fn few_neighbours_guesses(
    graph: &Graph,
    terminals: &VertexSet,
    s: usize,
) -> Vec<SoctCaseContext> {
    let mut out = Vec::new();
    let term = terminals.to_vec();
    let y_max = neighbour_split(s) - 1;
    for anchors in independent_subsets(graph, &term, anchor_size(s)) {
        let anchors = VertexSet::from_vertices(graph.order(), anchors);
        let around = graph.open_neighborhood(&anchors);
        let (ones, many): (Vec<usize>, Vec<usize>) = around
            .iter()
            .partition(|&v| graph.neighborhood(v).intersection_len(&anchors) == 1);
        let far = graph.closed_neighborhood(&anchors).complement();
        let pieces = graph.components_within(&far);
        if pieces.iter().any(|p| !graph.is_clique(p)) {
            continue;
        }
        let far_touch = graph.open_neighborhood(&far);
        let ones: Vec<usize> = ones
            .into_iter()
            .filter(|&v| !far_touch.contains(v))
            .collect();
        let single_sets = compatible_subsets(&ones, anchor_size(s).min(y_max), &|a, b| {
            singles_compatible(graph, &anchors, a, b, s)
        });
        let many: Vec<usize> = many
            .into_iter()
            .filter(|&v| graph.neighborhood(v).intersection_len(&anchors) >= s)
            .collect();
        let shared_sets = compatible_subsets(&many, y_max, &|a, b| {
            shared_compatible(graph, &anchors, a, b)
        });
        for single in &single_sets {
            for shared in &shared_sets {
                if single.len() + shared.len() > y_max {
                    continue;
                }
                let single = VertexSet::from_vertices(graph.order(), single.iter().copied());
                let shared = VertexSet::from_vertices(graph.order(), shared.iter().copied());
                let core = anchors.union(&single).union(&shared);
                if !is_t_bipartite_within(graph, &core, terminals) {
                    continue;
                }
                let mut far_kept = graph.empty_set();
                for piece in &pieces {
                    far_kept.union_with(&best_clique_extension(graph, terminals, &core, piece));
                }
                out.push(SoctCaseContext {
                    anchors: anchors.clone(),
                    single,
                    shared,
                    far: far.clone(),
                    far_kept,
                });
            }
        }
    }
    out
}

/// A largest subset of the clique `piece` that can join `kept` without
/// creating an odd T-cycle, assuming `kept` is T-bipartite and every two
/// vertices of `kept` adjacent to `piece` are joined in `kept` by an even
/// path through a terminal.
///
/// Under that assumption, two kept vertices of `piece` with different
/// attachments in `kept` close an odd T-cycle, so a part of three or more
/// is either unattached non-terminals plus non-terminals attached only to a
/// common non-terminal, or unattached non-terminals plus one attached
/// vertex. Parts of size two are found by checking every pair.
pub fn best_clique_extension(
    graph: &Graph,
    terminals: &VertexSet,
    kept: &VertexSet,
    piece: &VertexSet,
) -> VertexSet {
    let n = graph.order();
    let fits = |extra: &VertexSet| is_t_bipartite_within(graph, &kept.union(extra), terminals);
    let usable: Vec<usize> = piece
        .iter()
        .filter(|&u| fits(&VertexSet::singleton(n, u)))
        .collect();
    let Some(&first) = usable.first() else {
        return graph.empty_set();
    };
    let attach = |u: usize| graph.neighborhood(u).intersection(kept);
    let plain: Vec<usize> = usable
        .iter()
        .copied()
        .filter(|&u| !terminals.contains(u))
        .collect();
    let free = VertexSet::from_vertices(n, plain.iter().copied().filter(|&u| attach(u).is_empty()));
    let mut options: Vec<VertexSet> = vec![free.clone()];
    let mut classes: Vec<(usize, VertexSet)> = Vec::new();
    for &u in &plain {
        let a = attach(u);
        if a.is_empty() {
            continue;
        }
        let mut with_one = free.clone();
        with_one.insert(u);
        options.push(with_one);
        if a.len() == 1 {
            let x = a.first().expect("one attachment");
            if terminals.contains(x) {
                continue;
            }
            match classes.iter_mut().find(|(y, _)| *y == x) {
                Some((_, class)) => {
                    class.insert(u);
                }
                None => classes.push((x, VertexSet::singleton(n, u))),
            }
        }
    }
    options.extend(classes.into_iter().map(|(_, class)| class.union(&free)));
    options.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    if let Some(large) = options.iter().find(|o| o.len() >= 3 && fits(o)) {
        return large.clone();
    }
    for pair in usable.iter().copied().combinations(2) {
        let pair = VertexSet::from_vertices(n, pair);
        if fits(&pair) {
            return pair;
        }
    }
    VertexSet::singleton(n, first)
}

/// Whether `G[alive]` has a walk of even length from `from` to `to` that
/// visits a terminal.
pub fn even_t_walk(
    graph: &Graph,
    alive: &VertexSet,
    terminals: &VertexSet,
    from: usize,
    to: usize,
) -> bool {
    // State: (vertex, parity, seen a terminal).
    let index = |v: usize, odd: bool, hit: bool| v * 4 + (odd as usize) * 2 + hit as usize;
    let mut seen = vec![false; graph.order() * 4];
    let start_hit = terminals.contains(from);
    seen[index(from, false, start_hit)] = true;
    let mut queue = VecDeque::from([(from, false, start_hit)]);
    while let Some((v, odd, hit)) = queue.pop_front() {
        if v == to && !odd && hit {
            return true;
        }
        for &w in graph.neighbors(v) {
            if !alive.contains(w) {
                continue;
            }
            let next = (w, !odd, hit || terminals.contains(w));
            let i = index(next.0, next.1, next.2);
            if !seen[i] {
                seen[i] = true;
                queue.push_back(next);
            }
        }
    }
    false
}

/// Guesses for the case where the anchors have many surviving neighbours:
/// a set `Y2'` of [`shared_size`] pairwise non-adjacent vertices, each with
/// at least `max{2, s}` neighbours in the anchor set `A0 = N(Y2') ∩ A`.
///
/// Vertices of `N(A0)` outside `Y2'` may survive only if they avoid
/// `N(Y2')`, and then at most one per clique of them. The cliques far from
/// `A0` are completed one at a time given the surviving neighbours; the
/// choice of neighbours is searched exhaustively when there are few
/// options and by repeated single-clique improvement otherwise.
pub fn many_neighbours_guesses(
    graph: &Graph,
    terminals: &VertexSet,
    s: usize,
) -> Vec<SoctCaseContext> {
    let mut out = Vec::new();
    let n = graph.order();
    let term = terminals.to_vec();
    let need = s.max(2);
    for a_size in need..=anchor_size(s) {
        for anchors in independent_subsets(graph, &term, a_size) {
            let anchors = VertexSet::from_vertices(n, anchors);
            let around = graph.open_neighborhood(&anchors);
            let pool: Vec<usize> = around
                .iter()
                .filter(|&v| graph.neighborhood(v).intersection_len(&anchors) >= need)
                .collect();
            let far = graph.closed_neighborhood(&anchors).complement();
            let pieces = graph.components_within(&far);
            if pieces.iter().any(|p| !graph.is_clique(p)) {
                continue;
            }
            for shared in independent_subsets(graph, &pool, shared_size(s)) {
                let shared = VertexSet::from_vertices(n, shared);
                if !shared_guess_ok(graph, terminals, &anchors, &shared) {
                    continue;
                }
                let core = anchors.union(&shared);
                if !is_t_bipartite_within(graph, &core, terminals) {
                    continue;
                }
                let blocked = graph.open_neighborhood(&shared);
                let extra: VertexSet = around
                    .difference(&shared)
                    .difference(&blocked)
                    .iter()
                    .filter(|&w| {
                        is_t_bipartite_within(
                            graph,
                            &core.union(&VertexSet::singleton(n, w)),
                            terminals,
                        )
                    })
                    .fold(VertexSet::new(n), |mut acc, w| {
                        acc.insert(w);
                        acc
                    });
                let (single, far_kept) = choose_extras(graph, terminals, &core, &extra, &pieces);
                out.push(SoctCaseContext {
                    anchors: anchors.clone(),
                    single,
                    shared: shared.clone(),
                    far: far.clone(),
                    far_kept,
                });
            }
        }
    }
    out
}

/// Every anchor touches `shared`, members pairwise share an anchor, and
/// any two members are joined by an even path through a terminal.
fn shared_guess_ok(
    graph: &Graph,
    terminals: &VertexSet,
    anchors: &VertexSet,
    shared: &VertexSet,
) -> bool {
    if !anchors.is_subset(&graph.open_neighborhood(shared)) {
        return false;
    }
    let members = shared.to_vec();
    let alive = anchors.union(shared);
    members.iter().tuple_combinations().all(|(&a, &b)| {
        shared_compatible(graph, anchors, a, b) && even_t_walk(graph, &alive, terminals, a, b)
    })
}

/// Chooses at most one vertex per clique of `G[extra]` to keep, together
/// with the best completion of every far clique, maximising the total.
fn choose_extras(
    graph: &Graph,
    terminals: &VertexSet,
    core: &VertexSet,
    extra: &VertexSet,
    pieces: &[VertexSet],
) -> (VertexSet, VertexSet) {
    const EXHAUSTIVE_LIMIT: usize = 512;
    let cliques = graph.components_within(extra);
    let evaluate = |chosen: &VertexSet| -> (usize, VertexSet) {
        let kept = core.union(chosen);
        let mut far_kept = graph.empty_set();
        for piece in pieces {
            far_kept.union_with(&best_clique_extension(graph, terminals, &kept, piece));
        }
        (chosen.len() + far_kept.len(), far_kept)
    };
    // Cliques with a member that sees no far vertex cost nothing to use.
    let far_all = pieces.iter().fold(graph.empty_set(), |acc, p| acc.union(p));
    let mut chosen = graph.empty_set();
    let mut contested: Vec<Vec<usize>> = Vec::new();
    for clique in &cliques {
        match clique
            .iter()
            .find(|&w| graph.neighborhood(w).is_disjoint(&far_all))
        {
            Some(w) => {
                chosen.insert(w);
            }
            None => contested.push(clique.to_vec()),
        }
    }
    let combos = contested
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len() + 1))
        .unwrap_or(usize::MAX);
    if combos <= EXHAUSTIVE_LIMIT {
        let mut best: Option<(usize, VertexSet, VertexSet)> = None;
        let options = contested.iter().map(|c| {
            std::iter::once(None)
                .chain(c.iter().copied().map(Some))
                .collect::<Vec<_>>()
        });
        for pick in options.multi_cartesian_product() {
            let mut trial = chosen.clone();
            for w in pick.into_iter().flatten() {
                trial.insert(w);
            }
            let (score, far_kept) = evaluate(&trial);
            if best.as_ref().is_none_or(|(b, _, _)| score > *b) {
                best = Some((score, trial, far_kept));
            }
        }
        if contested.is_empty() {
            let (_, far_kept) = evaluate(&chosen);
            return (chosen, far_kept);
        }
        let (_, trial, far_kept) = best.expect("at least the empty pick");
        return (trial, far_kept);
    }
    let mut current = evaluate(&chosen);
    loop {
        let mut improved = false;
        for clique in &contested {
            let mut base = chosen.clone();
            for &w in clique {
                base.remove(w);
            }
            for option in std::iter::once(None).chain(clique.iter().copied().map(Some)) {
                let mut trial = base.clone();
                if let Some(w) = option {
                    trial.insert(w);
                }
                let result = evaluate(&trial);
                if result.0 > current.0 {
                    current = result;
                    chosen = trial;
                    improved = true;
                }
            }
        }
        if !improved {
            return (chosen, current.1);
        }
    }
}
