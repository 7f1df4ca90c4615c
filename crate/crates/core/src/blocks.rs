//! Block (biconnected component) decomposition.
//!
//! Bridges are reported as two-vertex blocks, so a block is non-trivial
//! exactly when it has at least three vertices. Isolated vertices belong to
//! no block.

use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    /// Contains a cycle, i.e. has at least three vertices.
    pub non_trivial: bool,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    pub fn of(graph: &Graph) -> BlockDecomposition {
        Self::within(graph, &graph.all_vertices())
    }

    /// Blocks of `G[alive]`, in original labels.
    pub fn within(graph: &Graph, alive: &VertexSet) -> BlockDecomposition {
        let mut blocks = Vec::new();
        let cut_vertices = for_each_block(graph, alive, |vertices| {
            let non_trivial = vertices.len() >= 3;
            let bipartite = !non_trivial || graph.is_bipartite_within(&vertices);
            blocks.push(Block {
                vertices,
                non_trivial,
                bipartite,
            });
            true
        });
        BlockDecomposition {
            blocks,
            cut_vertices,
        }
    }
}

struct Frame {
    vertex: usize,
    parent: usize,
    next: usize,
    children: usize,
}

/// Hopcroft–Tarjan over `G[alive]` with an explicit stack. Calls `visit` for
/// every block; if `visit` returns false the walk stops early. Returns the
/// cut vertices found (complete only if the walk ran to the end).
pub(crate) fn for_each_block<F>(graph: &Graph, alive: &VertexSet, mut visit: F) -> VertexSet
where
    F: FnMut(VertexSet) -> bool,
{
    const UNSEEN: usize = usize::MAX;
    let n = graph.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut cut = VertexSet::new(n);
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut frames: Vec<Frame> = Vec::new();

    for root in alive.iter() {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push(Frame {
            vertex: root,
            parent: UNSEEN,
            next: 0,
            children: 0,
        });
        while let Some(top) = frames.last_mut() {
            let v = top.vertex;
            let nbrs = graph.neighbors(v);
            if top.next < nbrs.len() {
                let w = nbrs[top.next];
                top.next += 1;
                if !alive.contains(w) || w == top.parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    top.children += 1;
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push(Frame {
                        vertex: w,
                        parent: v,
                        next: 0,
                        children: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            let finished = frames.pop().expect("non-empty");
            let Some(parent_frame) = frames.last() else {
                if finished.children >= 2 {
                    cut.insert(finished.vertex);
                }
                continue;
            };
            let p = parent_frame.vertex;
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if parent_frame.parent != UNSEEN {
                    cut.insert(p);
                }
                let mut block = VertexSet::new(n);
                while let Some((a, b)) = edge_stack.pop() {
                    block.insert(a);
                    block.insert(b);
                    if (a, b) == (p, v) {
                        break;
                    }
                }
                if !visit(block) {
                    return cut;
                }
            }
        }
    }
    cut
}
