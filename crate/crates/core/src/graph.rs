//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Algorithms that look at part of a
//! graph either take an `alive` [`VertexSet`] and stay in original labels, or
//! call [`Graph::induced_subgraph`] to get a relabeled copy.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: Vec<VertexSet>) -> Graph {
        let neighbors: Vec<Vec<usize>> = adjacency.iter().map(VertexSet::to_vec).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            neighbors,
            edge_count,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_adjacency(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let adjacency = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Self::from_adjacency(adjacency)
    }

    pub fn path(n: usize) -> Graph {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighborhood of `v` as a set.
    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// `N(S)`: vertices outside `S` with a neighbor in `S`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.iter() {
            out.union_with(&self.adjacency[v]);
        }
        out.difference_with(set);
        out
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.iter() {
            out.union_with(&self.adjacency[v]);
        }
        out
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_within(&self, v: usize, set: &VertexSet) -> usize {
        self.adjacency[v].intersection_len(set)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| self.degree_within(v, set))
            .sum::<usize>()
            / 2
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.degree_within(v, set) + 1 == k)
    }

    /// `G[S]` relabeled to `0..|S|`, together with the map from new labels to
    /// old ones (ascending, so relative order is preserved).
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old_of_new = set.to_vec();
        let mut new_of_old = vec![usize::MAX; self.order()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let k = old_of_new.len();
        let adjacency = old_of_new
            .iter()
            .map(|&old| {
                VertexSet::from_vertices(
                    k,
                    self.neighbors[old]
                        .iter()
                        .filter(|&&w| set.contains(w))
                        .map(|&w| new_of_old[w]),
                )
            })
            .collect();
        (Self::from_adjacency(adjacency), old_of_new)
    }

    /// `G - S`.
    pub fn remove_vertices(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&set.complement())
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adjacency = (0..n)
            .map(|v| {
                let mut row = self.adjacency[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Self::from_adjacency(adjacency)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.order(), edges).expect("union of valid graphs")
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let across = (0..shift).flat_map(|u| (0..other.order()).map(move |v| (u, v + shift)));
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(across);
        Graph::from_edges(shift + other.order(), edges).expect("join of valid graphs")
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.all_vertices())
    }

    /// Components of `G[alive]`, in original labels, ordered by least member.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in alive.iter() {
            if seen.contains(root) {
                continue;
            }
            let mut comp = self.empty_set();
            seen.insert(root);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.neighbors[v] {
                    if alive.contains(w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_within(&self, alive: &VertexSet) -> bool {
        self.components_within(alive).len() <= 1
    }

    /// Whether `G[alive]` is acyclic.
    pub fn is_forest_within(&self, alive: &VertexSet) -> bool {
        self.edges_within(alive) + self.components_within(alive).len() == alive.len()
    }

    /// Two-colors `G`, or returns the vertices of an odd cycle in order.
    pub fn two_coloring(&self) -> std::result::Result<Vec<bool>, Vec<usize>> {
        self.two_coloring_within(&self.all_vertices())
    }

    /// Two-colors `G[alive]`. Entries for vertices outside `alive` are
    /// `false` and meaningless.
    pub fn two_coloring_within(
        &self,
        alive: &VertexSet,
    ) -> std::result::Result<Vec<bool>, Vec<usize>> {
        let n = self.order();
        let mut color = vec![false; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in alive.iter() {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in &self.neighbors[v] {
                    if !alive.contains(w) {
                        continue;
                    }
                    if depth[w] == usize::MAX {
                        depth[w] = depth[v] + 1;
                        color[w] = !color[v];
                        parent[w] = v;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Err(odd_cycle_from_tree(v, w, &parent, &depth));
                    }
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite_within(&self, alive: &VertexSet) -> bool {
        self.two_coloring_within(alive).is_ok()
    }
}

/// Closes the two BFS-tree paths from `u` and `v` to their common ancestor
/// with the edge `uv` into a cycle.
fn odd_cycle_from_tree(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
