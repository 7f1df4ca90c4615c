//! Hereditary class membership: forbidden-pattern search, cograph
//! recognition with a binary cotree, and a summary classifier.

use std::fmt;

use crate::error::{ClassViolation, Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

pub const MAX_PATTERN_ORDER: usize = 12;

/// A small named graph used as a forbidden induced subgraph.
#[derive(Clone, Debug)]
pub struct PatternGraph {
    name: String,
    graph: Graph,
}

impl PatternGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Self> {
        if graph.order() > MAX_PATTERN_ORDER {
            return Err(Error::PatternTooLarge(graph.order()));
        }
        Ok(PatternGraph {
            name: name.into(),
            graph,
        })
    }

    fn named(name: String, graph: Graph) -> Self {
        Self::new(name, graph).expect("named pattern within size limit")
    }

    pub fn path(r: usize) -> Self {
        Self::named(format!("P{r}"), Graph::path(r))
    }

    pub fn cycle(r: usize) -> Self {
        Self::named(format!("C{r}"), Graph::cycle(r))
    }

    pub fn complete(r: usize) -> Self {
        Self::named(format!("K{r}"), Graph::complete(r))
    }

    pub fn independent(s: usize) -> Self {
        Self::named(format!("{s}P1"), Graph::empty(s))
    }

    /// `sP2`: a perfect matching on `2s` vertices.
    pub fn matching(s: usize) -> Self {
        let g = Graph::from_edges(2 * s, (0..s).map(|i| (2 * i, 2 * i + 1))).expect("matching");
        Self::named(format!("{s}P2"), g)
    }

    pub fn claw() -> Self {
        Self::named("K1,3".to_string(), Graph::star(3))
    }

    /// `sP1 + P3`. The path comes first: vertices `0-1-2`, then `s` isolated.
    pub fn sp1_p3(s: usize) -> Self {
        Self::linear_forest(s, 3)
    }

    /// `sP1 + P4`. The path comes first: vertices `0-1-2-3`, then `s` isolated.
    pub fn sp1_p4(s: usize) -> Self {
        Self::linear_forest(s, 4)
    }

    fn linear_forest(s: usize, path: usize) -> Self {
        let g = Graph::path(path).disjoint_union(&Graph::empty(s));
        let name = match s {
            0 => format!("P{path}"),
            1 => format!("P1+P{path}"),
            _ => format!("{s}P1+P{path}"),
        };
        Self::named(name, g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Finds an induced copy of `pattern` in `graph`.
///
/// Returns `phi` with `phi[i]` the graph vertex playing pattern vertex `i`,
/// such that `ij` is a pattern edge iff `phi[i] phi[j]` is a graph edge.
pub fn find_induced(graph: &Graph, pattern: &PatternGraph) -> Option<Vec<usize>> {
    find_induced_within(graph, &graph.all_vertices(), pattern)
}

/// As [`find_induced`], restricted to `G[alive]`.
pub fn find_induced_within(
    graph: &Graph,
    alive: &VertexSet,
    pattern: &PatternGraph,
) -> Option<Vec<usize>> {
    let h = pattern.graph();
    let k = h.order();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > alive.len() {
        return None;
    }
    let order = search_order(h);
    // For each position, the earlier positions it must be adjacent to.
    let anchors: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(pos, &p)| order[..pos].iter().copied().find(|&q| h.has_edge(p, q)))
        .collect();
    let mut phi = vec![usize::MAX; k];
    let mut used = VertexSet::new(graph.order());
    if extend(graph, alive, h, &order, &anchors, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

/// Pattern vertices in BFS order from a maximum-degree vertex, component by
/// component, so most positions have an already-placed neighbor.
fn search_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.order());
    let mut placed = VertexSet::new(h.order());
    while order.len() < h.order() {
        let root = h
            .vertices()
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed.insert(root);
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for &w in h.neighbors(v) {
                if placed.insert(w) {
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    graph: &Graph,
    alive: &VertexSet,
    h: &Graph,
    order: &[usize],
    anchors: &[Option<usize>],
    pos: usize,
    phi: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let p = order[pos];
    let candidates: Vec<usize> = match anchors[pos] {
        Some(q) => graph.neighbors(phi[q]).to_vec(),
        None => alive.to_vec(),
    };
    for v in candidates {
        if !alive.contains(v) || used.contains(v) || graph.degree(v) < h.degree(p) {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&q| h.has_edge(p, q) == graph.has_edge(v, phi[q]));
        if !consistent {
            continue;
        }
        phi[p] = v;
        used.insert(v);
        if extend(graph, alive, h, order, anchors, pos + 1, phi, used) {
            return true;
        }
        used.remove(v);
    }
    phi[p] = usize::MAX;
    false
}

/// Fails with [`Error::NotInClass`] if `graph` contains `pattern`.
pub fn require_free(graph: &Graph, pattern: &PatternGraph) -> Result<()> {
    match find_induced(graph, pattern) {
        None => Ok(()),
        Some(witness) => Err(Error::NotInClass(ClassViolation {
            pattern: pattern.name().to_string(),
            witness,
        })),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    Union(usize, usize),
    Join(usize, usize),
}

/// A binary ("modified") cotree. Children always precede their parent in
/// the node arena, so iterating nodes in index order is a valid bottom-up
/// schedule.
#[derive(Clone, Debug)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    leaves: Vec<VertexSet>,
    root: usize,
}

impl Cotree {
    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// `V(G_x)` for node `x`.
    pub fn vertices_below(&self, node: usize) -> &VertexSet {
        &self.leaves[node]
    }

    /// Rebuilds the graph the cotree encodes.
    pub fn reconstruct(&self) -> Graph {
        let n = self.leaves[self.root].capacity();
        let mut edges = Vec::new();
        for node in &self.nodes {
            if let CotreeNode::Join(a, b) = *node {
                for u in self.leaves[a].iter() {
                    for v in self.leaves[b].iter() {
                        edges.push((u, v));
                    }
                }
            }
        }
        Graph::from_edges(n, edges).expect("cotree leaves are distinct vertices")
    }

    fn write_node(&self, node: usize, out: &mut String) {
        match self.nodes[node] {
            CotreeNode::Leaf(v) => out.push_str(&v.to_string()),
            CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => {
                let tag = if matches!(self.nodes[node], CotreeNode::Join(..)) {
                    "J"
                } else {
                    "U"
                };
                out.push('(');
                out.push_str(tag);
                out.push(' ');
                self.write_node(a, out);
                out.push(' ');
                self.write_node(b, out);
                out.push(')');
            }
        }
    }
}

/// Nested text form, e.g. `(J (U 0 1) 2)`.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.write_node(self.root, &mut out);
        f.write_str(&out)
    }
}

/// Builds a binary cotree of `graph`, or returns four vertices inducing a
/// `P4`.
///
/// Recursive decomposition: a disconnected piece becomes a union over its
/// components, a piece with disconnected complement becomes a join over its
/// co-components, and a piece that is neither contains a `P4`. Multiway
/// nodes are split into a left fold over children ordered by least vertex.
pub fn build_modified_cotree(graph: &Graph) -> std::result::Result<Cotree, Vec<usize>> {
    assert!(graph.order() >= 1, "cotree of the empty graph");
    let complement = graph.complement();
    let mut tree = Cotree {
        nodes: Vec::new(),
        leaves: Vec::new(),
        root: 0,
    };
    tree.root = build_node(graph, &complement, &graph.all_vertices(), &mut tree)?;
    Ok(tree)
}

fn build_node(
    graph: &Graph,
    complement: &Graph,
    part: &VertexSet,
    tree: &mut Cotree,
) -> std::result::Result<usize, Vec<usize>> {
    if part.len() == 1 {
        let v = part.first().expect("non-empty");
        tree.nodes.push(CotreeNode::Leaf(v));
        tree.leaves.push(part.clone());
        return Ok(tree.nodes.len() - 1);
    }
    let components = graph.components_within(part);
    let (pieces, join) = if components.len() > 1 {
        (components, false)
    } else {
        let co = complement.components_within(part);
        if co.len() == 1 {
            let witness = find_induced_within(graph, part, &PatternGraph::path(4))
                .expect("connected, co-connected graphs on two or more vertices contain P4");
            return Err(witness);
        }
        (co, true)
    };
    let mut acc: Option<usize> = None;
    for piece in &pieces {
        let child = build_node(graph, complement, piece, tree)?;
        acc = Some(match acc {
            None => child,
            Some(left) => {
                let below = tree.leaves[left].union(&tree.leaves[child]);
                tree.nodes.push(if join {
                    CotreeNode::Join(left, child)
                } else {
                    CotreeNode::Union(left, child)
                });
                tree.leaves.push(below);
                tree.nodes.len() - 1
            }
        });
    }
    Ok(acc.expect("at least two pieces"))
}

/// [`build_modified_cotree`] with the failure mapped to [`Error::NotInClass`].
pub fn require_cograph(graph: &Graph) -> Result<Cotree> {
    build_modified_cotree(graph).map_err(|witness| {
        Error::NotInClass(ClassViolation {
            pattern: "P4".to_string(),
            witness,
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub is_p4_free: bool,
    pub is_split: bool,
    /// Least `s <= s_max` with the graph `(sP1+P3)`-free.
    pub sp1p3_free_s: Option<usize>,
    /// Least `s <= s_max` with the graph `(sP1+P4)`-free.
    pub sp1p4_free_s: Option<usize>,
    pub is_claw_free: bool,
}

pub const MAX_CLASSIFY_S: usize = 8;

pub fn classify(graph: &Graph, s_max: usize) -> Result<ClassReport> {
    if s_max > MAX_CLASSIFY_S {
        return Err(Error::PreconditionViolated(format!(
            "s_max = {s_max} exceeds {MAX_CLASSIFY_S}"
        )));
    }
    let free = |p: PatternGraph| find_induced(graph, &p).is_none();
    let is_split = free(PatternGraph::cycle(4))
        && free(PatternGraph::cycle(5))
        && free(PatternGraph::matching(2));
    Ok(ClassReport {
        is_p4_free: free(PatternGraph::path(4)),
        is_split,
        sp1p3_free_s: least_free_s(graph, s_max, PatternGraph::sp1_p3),
        sp1p4_free_s: least_free_s(graph, s_max, PatternGraph::sp1_p4),
        is_claw_free: free(PatternGraph::claw()),
    })
}

/// Least `s` in `0..=s_max` for which `graph` has no induced `make(s)`.
/// Freeness is monotone in `s`, so this scans upward.
pub fn least_free_s(
    graph: &Graph,
    s_max: usize,
    make: impl Fn(usize) -> PatternGraph,
) -> Option<usize> {
    (0..=s_max).find(|&s| find_induced(graph, &make(s)).is_none())
}
